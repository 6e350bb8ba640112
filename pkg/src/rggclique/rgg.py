"""Instance generation: Poisson vertex counts, uniform torus positions, cell-list
edge construction, and clique planting.

Randomness contract: every instance is driven by one 64-bit seed.  Purpose
substreams (vertex count, positions, clique choice) are derived from it with
fixed labeled spawn keys, so e.g. forcing the vertex count does not shift the
position stream.  Reproducibility is guaranteed within this implementation,
not across libraries.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import CliqueTooLargeError, ModelDomainError
from .geometry import MAX_RADIUS
from .thresholds import ModelParams

_SUBSTREAMS = {"count": 0, "positions": 1, "clique": 2}


def _substream(seed, label):
    """Deterministic per-purpose generator: SeedSequence(seed, spawn_key=(label,))."""
    key = _SUBSTREAMS[label]
    return np.random.default_rng(np.random.SeedSequence(entropy=seed & (2**64 - 1),
                                                        spawn_key=(key,)))


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable geometric graph: positions plus CSR adjacency with sorted rows.

    ``indptr``/``indices`` hold, for each vertex, its sorted neighbor list;
    the structure is symmetric, self-loop-free and duplicate-free.
    """

    positions: np.ndarray  # (N, d) float64, coordinates in [0, 1)
    indptr: np.ndarray     # (N + 1,) int64
    indices: np.ndarray    # (2M,) int64
    params: ModelParams | None = None

    def __post_init__(self):
        for arr in (self.positions, self.indptr, self.indices):
            arr.setflags(write=False)

    @property
    def num_vertices(self):
        return self.positions.shape[0]

    @property
    def dimension(self):
        return self.positions.shape[1]

    @property
    def num_edges(self):
        return self.indices.size // 2

    def degrees(self):
        return np.diff(self.indptr)

    def degree(self, i):
        return int(self.indptr[i + 1] - self.indptr[i])

    def neighbors(self, i):
        """Sorted neighbor ids of vertex i (a read-only view)."""
        return self.indices[self.indptr[i]:self.indptr[i + 1]]

    def has_edge(self, i, j):
        row = self.neighbors(i)
        pos = np.searchsorted(row, j)
        return bool(pos < row.size and row[pos] == j)

    def edge_arrays(self):
        """All edges as (u, v) arrays with u < v, in lexicographic order."""
        u = np.repeat(np.arange(self.num_vertices, dtype=np.int64), self.degrees())
        v = self.indices
        mask = u < v
        return u[mask], v[mask]


@dataclass(frozen=True, eq=False)
class PlantedInstance:
    """A graph after clique planting, together with the hidden set and the
    edges the planting added (removing them restores the base graph)."""

    graph: Graph
    clique: np.ndarray                     # sorted vertex ids, size k
    planted_edges: tuple[tuple[int, int], ...]  # lexicographic, i < j

    def __post_init__(self):
        self.clique.setflags(write=False)

    @property
    def k(self):
        return int(self.clique.size)


def _adjacency_from_edges(n, u, v):
    """CSR adjacency (sorted rows) from undirected edge arrays with u < v."""
    arr = np.concatenate([u, v])
    brr = np.concatenate([v, u])
    counts = np.bincount(arr, minlength=n)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=indptr[1:])
    order = np.lexsort((brr, arr))
    return indptr, brr[order].astype(np.int64, copy=False)


def _cell_list_edges(positions, radius):
    """All pairs at torus distance <= radius, via a wrap-aware cell grid.

    Cells per axis m = floor(1/radius), so the cell side 1/m is at least the
    radius, cells tile [0,1)^d exactly, and only the 3^d surrounding cells can
    hold a neighbor.  Each unordered cell pair is visited once through a
    half stencil (offsets whose first nonzero component is positive), keeping
    the expected cost proportional to N times the mean degree.
    """
    n, d = positions.shape
    if n < 2:
        return (np.empty(0, dtype=np.int64),) * 2
    m = int(np.floor(1.0 / radius))
    cells = np.minimum((positions * m).astype(np.int64), m - 1)
    shape = (m,) * d
    flat = np.ravel_multi_index(tuple(cells.T), shape)
    order = np.argsort(flat, kind="stable")
    flat_sorted = flat[order]

    offsets = [off for off in np.ndindex(*(3,) * d)
               if _first_nonzero_positive(np.array(off) - 1)]
    r2 = radius * radius
    out_u, out_v = [], []

    def _candidate_pairs(target_flat, same_cell):
        lo = np.searchsorted(flat_sorted, target_flat, side="left")
        hi = np.searchsorted(flat_sorted, target_flat, side="right")
        counts = hi - lo
        total = int(counts.sum())
        if total == 0:
            return None
        left = np.repeat(np.arange(n, dtype=np.int64), counts)
        starts = np.repeat(lo, counts)
        offs = np.arange(total, dtype=np.int64) - np.repeat(
            np.concatenate([[0], np.cumsum(counts)[:-1]]), counts)
        right = order[starts + offs]
        if same_cell:
            keep = left < right
        else:
            keep = np.ones(total, dtype=bool)
        return left[keep], right[keep]

    # same-cell pairs (i < j), then the half stencil of neighboring cells
    groups = [_candidate_pairs(flat, same_cell=True)]
    for off in offsets:
        shifted = (cells + (np.asarray(off) - 1)) % m
        groups.append(_candidate_pairs(np.ravel_multi_index(tuple(shifted.T), shape),
                                       same_cell=False))

    for pair in groups:
        if pair is None:
            continue
        a, b = pair
        diff = np.abs(positions[a] - positions[b])
        diff = np.minimum(diff, 1.0 - diff)
        dist2 = np.einsum("ij,ij->i", diff, diff)
        hit = dist2 <= r2
        if np.any(hit):
            a, b = a[hit], b[hit]
            out_u.append(np.minimum(a, b))
            out_v.append(np.maximum(a, b))

    if not out_u:
        return (np.empty(0, dtype=np.int64),) * 2
    u = np.concatenate(out_u)
    v = np.concatenate(out_v)
    order_uv = np.lexsort((v, u))
    return u[order_uv], v[order_uv]


def _first_nonzero_positive(off):
    for x in off:
        if x != 0:
            return x > 0
    return False  # the all-zero offset is handled as the same-cell pass


def graph_from_positions(positions, radius, params=None):
    """Build the threshold graph on explicitly given positions (test hook).

    Edges join exactly the pairs at torus distance <= radius.
    """
    positions = np.ascontiguousarray(positions, dtype=float)
    if positions.ndim != 2:
        raise ValueError("positions must be an (N, d) array")
    if positions.size and (positions.min() < 0.0 or positions.max() >= 1.0):
        raise ValueError("torus coordinates must lie in [0, 1)")
    if not 0.0 < radius < MAX_RADIUS:
        raise ModelDomainError(f"radius must lie in (0, {MAX_RADIUS})")
    n, d = positions.shape
    if params is None and n > 0:
        params = ModelParams.from_radius(n=max(n, 1), d=d, radius=radius)
    u, v = _cell_list_edges(positions, radius)
    indptr, indices = _adjacency_from_edges(n, u, v)
    return Graph(positions=positions, indptr=indptr, indices=indices, params=params)


def sample_instance(params, seed, fixed_count=None):
    """Draw one graph: N ~ Poisson(n) (or ``fixed_count``), i.i.d. uniform
    positions, and every pair at torus distance <= radius joined."""
    if params.radius >= MAX_RADIUS:
        raise ModelDomainError(f"radius must lie below {MAX_RADIUS}")
    if fixed_count is not None:
        n_vertices = int(fixed_count)
        if n_vertices < 0:
            raise ValueError("fixed vertex count must be non-negative")
    else:
        n_vertices = int(_substream(seed, "count").poisson(params.n))
    positions = _substream(seed, "positions").random((n_vertices, params.d))
    u, v = _cell_list_edges(positions, params.radius) if params.radius > 0 else \
        (np.empty(0, dtype=np.int64),) * 2
    indptr, indices = _adjacency_from_edges(n_vertices, u, v)
    return Graph(positions=positions, indptr=indptr, indices=indices, params=params)


def plant_clique(graph, k, seed, members=None):
    """Plant a clique on k uniformly chosen vertices, adding only missing edges.

    ``members`` overrides the random choice with an explicit vertex set (test
    hook); planting an already-planted set again is a no-op on the edges.
    """
    n = graph.num_vertices
    if k < 2:
        raise ValueError("clique size must be at least 2")
    if k > n:
        raise CliqueTooLargeError(f"clique size {k} exceeds vertex count {n}")
    if members is None:
        chosen = _substream(seed, "clique").choice(n, size=k, replace=False)
        clique = np.sort(chosen.astype(np.int64))
    else:
        clique = np.unique(np.asarray(members, dtype=np.int64))
        if clique.size != k:
            raise ValueError("members must be k distinct vertex ids")
        if clique[0] < 0 or clique[-1] >= n:
            raise ValueError("clique members out of range")

    missing = [(int(a), int(b))
               for idx, a in enumerate(clique[:-1])
               for b in clique[idx + 1:]
               if not graph.has_edge(int(a), int(b))]
    if missing:
        u, v = graph.edge_arrays()
        add = np.array(missing, dtype=np.int64)
        u = np.concatenate([u, add[:, 0]])
        v = np.concatenate([v, add[:, 1]])
        indptr, indices = _adjacency_from_edges(n, u, v)
        planted_graph = Graph(positions=graph.positions, indptr=indptr,
                              indices=indices, params=graph.params)
    else:
        planted_graph = graph
    return PlantedInstance(graph=planted_graph, clique=clique,
                           planted_edges=tuple(missing))


def common_neighbors(graph, i, j):
    """Sorted ids adjacent to both i and j, by a linear merge of the two rows."""
    if i == j:
        raise ValueError("common neighbors need two distinct vertices")
    a = graph.neighbors(i).tolist()
    b = graph.neighbors(j).tolist()
    out = []
    p = q = 0
    while p < len(a) and q < len(b):
        x, y = a[p], b[q]
        if x == y:
            out.append(x)
            p += 1
            q += 1
        elif x < y:
            p += 1
        else:
            q += 1
    return np.array(out, dtype=np.int64)


def is_clique(graph, members):
    """True iff every pair in ``members`` is an edge (at most C(|S|,2) probes)."""
    ids = [int(x) for x in members]
    for idx in range(1, len(ids)):
        a = ids[idx]
        for b in ids[:idx]:
            if a == b:
                raise ValueError("clique members must be distinct")
            if not graph.has_edge(a, b):
                return False
    return True
