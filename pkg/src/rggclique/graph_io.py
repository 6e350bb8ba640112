"""Text file format for graphs and planted instances.

Layout::

    rggraph v1 <d> <r> <N>
    <N lines: d space-separated coordinates, 17 significant digits>
    edges <M>
    <M lines: "i j" with i < j>

A planted instance appends::

    clique <k>
    <one line: k sorted vertex ids>
    planted <P>
    <P lines: "i j" with i < j>

Positions are written with 17 significant digits, enough to round-trip
float64 exactly, so a loaded graph reproduces the writer's adjacency.
"""

from __future__ import annotations

import numpy as np

from .errors import GraphFormatError
from .rgg import Graph, PlantedInstance, _adjacency_from_edges, is_clique
from .thresholds import ModelParams

_MAGIC = "rggraph"
_VERSION = "v1"


def write_graph(graph, path):
    """Write a graph (header, positions, edges) to ``path``."""
    with open(path, "w", encoding="utf-8") as handle:
        _write_graph_sections(graph, handle)


def write_instance(instance, path):
    """Write a planted instance: the planted graph plus clique/planted sections."""
    with open(path, "w", encoding="utf-8") as handle:
        _write_graph_sections(instance.graph, handle)
        handle.write(f"clique {instance.k}\n")
        handle.write(" ".join(str(int(v)) for v in instance.clique) + "\n")
        handle.write(f"planted {len(instance.planted_edges)}\n")
        for i, j in instance.planted_edges:
            handle.write(f"{i} {j}\n")


def _write_graph_sections(graph, handle):
    if graph.params is None:
        raise ValueError("writing requires generation parameters on the graph")
    n = graph.num_vertices
    handle.write(f"{_MAGIC} {_VERSION} {graph.params.d} "
                 f"{graph.params.radius:.17g} {n}\n")
    for row in graph.positions:
        handle.write(" ".join(f"{x:.17g}" for x in row) + "\n")
    u, v = graph.edge_arrays()
    handle.write(f"edges {u.size}\n")
    for i, j in zip(u.tolist(), v.tolist()):
        handle.write(f"{i} {j}\n")


def read(path):
    """Read a graph or planted-instance file; the clique section decides which."""
    with open(path, "r", encoding="utf-8") as handle:
        lines = handle.read().splitlines()
    reader = _Reader(lines)
    graph = _read_graph_sections(reader)
    if reader.exhausted():
        return graph
    k, clique = _read_clique_section(reader, graph)
    planted = _read_planted_section(reader, graph, clique)
    if not reader.exhausted():
        raise GraphFormatError(reader.line_number + 1, "trailing content after instance")
    if not is_clique(graph, clique):
        raise GraphFormatError(reader.line_number, "stored clique is not complete in the stored graph")
    return PlantedInstance(graph=graph, clique=clique, planted_edges=planted)


def read_graph(path):
    """Read a plain graph file; instance files are rejected."""
    loaded = read(path)
    if isinstance(loaded, PlantedInstance):
        raise GraphFormatError(0, f"{path} is a planted instance, not a plain graph")
    return loaded


class _Reader:
    def __init__(self, lines):
        self.lines = lines
        self.line_number = 0  # 1-based number of the last line consumed

    def next_line(self, what):
        if self.line_number >= len(self.lines):
            raise GraphFormatError(self.line_number + 1, f"unexpected end of file, expected {what}")
        self.line_number += 1
        return self.lines[self.line_number - 1]

    def exhausted(self):
        return all(not line.strip() for line in self.lines[self.line_number:])

    def fail(self, message):
        raise GraphFormatError(self.line_number, message)


def _read_graph_sections(reader):
    header = reader.next_line("header").split()
    if len(header) != 5 or header[0] != _MAGIC or header[1] != _VERSION:
        reader.fail(f"expected '{_MAGIC} {_VERSION} <d> <r> <N>' header")
    try:
        d = int(header[2])
        radius = float(header[3])
        n = int(header[4])
    except ValueError:
        reader.fail("header fields d, r, N must be numeric")
    if d < 1 or n < 0:
        reader.fail("header requires d >= 1 and N >= 0")

    positions = np.empty((n, d), dtype=float)
    for row in range(n):
        parts = reader.next_line("a position line").split()
        if len(parts) != d:
            reader.fail(f"expected {d} coordinates")
        try:
            coords = [float(p) for p in parts]
        except ValueError:
            reader.fail("coordinates must be numbers")
        if any(not 0.0 <= c < 1.0 for c in coords):
            reader.fail("coordinates must lie in [0, 1)")
        positions[row] = coords

    marker = reader.next_line("'edges <M>'").split()
    if len(marker) != 2 or marker[0] != "edges":
        reader.fail("expected 'edges <M>'")
    try:
        m = int(marker[1])
    except ValueError:
        reader.fail("edge count must be an integer")
    u = np.empty(m, dtype=np.int64)
    v = np.empty(m, dtype=np.int64)
    previous = (-1, -1)
    for row in range(m):
        i, j = _read_pair(reader, n)
        if (i, j) <= previous:
            reader.fail("edges must be strictly increasing lexicographically")
        previous = (i, j)
        u[row], v[row] = i, j

    params = None
    if n > 0:
        params = ModelParams.from_radius(n=n, d=d, radius=radius)
    indptr, indices = _adjacency_from_edges(n, u, v)
    return Graph(positions=positions, indptr=indptr, indices=indices, params=params)


def _read_pair(reader, n):
    parts = reader.next_line("an 'i j' pair").split()
    if len(parts) != 2:
        reader.fail("expected 'i j'")
    try:
        i, j = int(parts[0]), int(parts[1])
    except ValueError:
        reader.fail("vertex ids must be integers")
    if not 0 <= i < j < n:
        reader.fail(f"pair must satisfy 0 <= i < j < {n}")
    return i, j


def _read_clique_section(reader, graph):
    marker = reader.next_line("'clique <k>'").split()
    if len(marker) != 2 or marker[0] != "clique":
        reader.fail("expected 'clique <k>'")
    try:
        k = int(marker[1])
    except ValueError:
        reader.fail("clique size must be an integer")
    parts = reader.next_line("the clique id line").split()
    if len(parts) != k:
        reader.fail(f"expected {k} vertex ids")
    try:
        ids = [int(p) for p in parts]
    except ValueError:
        reader.fail("vertex ids must be integers")
    if ids != sorted(set(ids)):
        reader.fail("clique ids must be sorted and distinct")
    if ids and (ids[0] < 0 or ids[-1] >= graph.num_vertices):
        reader.fail("clique ids out of range")
    return k, np.array(ids, dtype=np.int64)


def _read_planted_section(reader, graph, clique):
    marker = reader.next_line("'planted <P>'").split()
    if len(marker) != 2 or marker[0] != "planted":
        reader.fail("expected 'planted <P>'")
    try:
        count = int(marker[1])
    except ValueError:
        reader.fail("planted count must be an integer")
    members = set(clique.tolist())
    pairs = []
    for _ in range(count):
        i, j = _read_pair(reader, graph.num_vertices)
        if i not in members or j not in members:
            reader.fail("planted pairs must join clique members")
        if not graph.has_edge(i, j):
            reader.fail("planted pairs must be edges of the stored graph")
        pairs.append((i, j))
    return tuple(pairs)
