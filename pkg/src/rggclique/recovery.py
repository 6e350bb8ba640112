"""The two recovery algorithms: degree ranking (VD) and common neighbors (CN).

Both read an immutable graph and the known clique size k.  VD returns the k
vertices of largest degree (ties to the smaller id).  CN scans edges in
lexicographic order and returns, for the first edge whose endpoints share
exactly k-2 common neighbors forming a clique, those neighbors plus the two
endpoints; the empty set if no edge qualifies.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, replace

import numpy as np
from scipy.sparse import csr_matrix

from .rgg import common_neighbors, is_clique


@dataclass(frozen=True)
class RecoveryResult:
    """Output of one recovery run, plus work counters and (after scoring
    against a ground truth) the exact-recovery flag and overlap size."""

    method: str
    output: np.ndarray  # sorted vertex ids; empty when nothing qualified
    exact_match: bool | None = None
    overlap: int | None = None
    scanned_edges: int = 0
    clique_checks: int = 0

    def __post_init__(self):
        self.output.setflags(write=False)


def vd_recover(graph, k):
    """The k largest-degree vertices, via a size-k min-heap over one degree pass.

    Ties at equal degree keep the smaller vertex id.
    """
    n = graph.num_vertices
    if not 1 <= k <= n:
        raise ValueError(f"k must lie in [1, {n}], got {k}")
    heap = []  # entries (degree, -id): the heap root is the current worst pick
    for vid, deg in enumerate(graph.degrees().tolist()):
        item = (deg, -vid)
        if len(heap) < k:
            heapq.heappush(heap, item)
        elif item > heap[0]:
            heapq.heapreplace(heap, item)
    chosen = np.array(sorted(-neg for _deg, neg in heap), dtype=np.int64)
    return RecoveryResult(method="VD", output=chosen)


def _edge_common_counts(graph, u, v):
    """Common-neighbor count for every edge (u[e], v[e]).

    Counts come from the sparse product of the adjacency with itself, masked
    back onto the edge positions; edges whose endpoints share no neighbor are
    absent from the masked product and filled with zero.
    """
    n = graph.num_vertices
    adjacency = csr_matrix(
        (np.ones(graph.indices.size, dtype=np.int32),
         graph.indices.astype(np.int32, copy=False), graph.indptr),
        shape=(n, n),
    )
    masked = (adjacency @ adjacency).multiply(adjacency).tocsr()
    masked.sum_duplicates()
    masked.sort_indices()
    paths2 = masked.tocoo()
    mask = paths2.row < paths2.col
    keys = paths2.row[mask].astype(np.int64) * n + paths2.col[mask].astype(np.int64)
    values = paths2.data[mask]
    edge_keys = u * n + v
    pos = np.searchsorted(keys, edge_keys)
    counts = np.zeros(u.size, dtype=np.int64)
    found = (pos < keys.size)
    found[found] = keys[pos[found]] == edge_keys[found]
    counts[found] = values[pos[found]]
    return counts


def cn_recover(graph, k):
    """Scan edges lexicographically for one whose endpoints have exactly k-2
    common neighbors forming a clique; return endpoints plus those neighbors.

    For k = 2 the required neighbor set is empty, which is vacuously a clique,
    so the first edge with no common neighbors is returned.  The counting
    pass is vectorized but the returned edge is exactly the one a sequential
    scan would stop at.
    """
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    empty = np.empty(0, dtype=np.int64)
    u, v = graph.edge_arrays()
    n_edges = u.size
    if n_edges == 0:
        return RecoveryResult(method="CN", output=empty)
    counts = _edge_common_counts(graph, u, v)
    checks = 0
    for e in np.flatnonzero(counts == k - 2):
        i, j = int(u[e]), int(v[e])
        shared = common_neighbors(graph, i, j)
        checks += 1
        if is_clique(graph, shared):
            out = np.sort(np.concatenate([shared, [i, j]]))
            return RecoveryResult(method="CN", output=out,
                                  scanned_edges=int(e) + 1, clique_checks=checks)
    return RecoveryResult(method="CN", output=empty,
                          scanned_edges=n_edges, clique_checks=checks)


def evaluate(result, truth):
    """Score a result against the hidden set: exact match plus overlap size."""
    truth = np.asarray(truth, dtype=np.int64)
    overlap = int(np.intersect1d(result.output, truth).size)
    exact = result.output.size == truth.size and overlap == truth.size
    return replace(result, exact_match=exact, overlap=overlap)
