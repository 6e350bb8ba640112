"""Brute-force reference implementations.

Deliberately naive, independent routes used to validate the optimized
generator and algorithms on small instances and to calibrate the geometric
constants by rejection sampling.  Instance sizes are expected to stay at or
below about a thousand vertices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np


def brute_force_edges(positions, radius):
    """Every pair at torus distance <= radius, by the quadratic scan.

    Returns an (M, 2) int array with rows (i, j), i < j, lexicographically
    sorted, so equality against an optimized edge list is plain array equality.
    """
    positions = np.asarray(positions, dtype=float)
    n = positions.shape[0]
    if n < 2:
        return np.empty((0, 2), dtype=np.int64)
    diff = np.abs(positions[:, None, :] - positions[None, :, :])
    diff = np.minimum(diff, 1.0 - diff)
    dist2 = np.sum(diff * diff, axis=-1)
    close = dist2 <= radius * radius
    iu, ju = np.triu_indices(n, k=1)
    hit = close[iu, ju]
    return np.stack([iu[hit], ju[hit]], axis=1).astype(np.int64)


def brute_force_cn_scan(graph, k):
    """Exhaustive version of the common-neighbors scan.

    Lists, in lexicographic edge order, every edge whose endpoints share
    exactly k-2 common neighbors forming a clique, with the candidate set
    each would produce.  A correct scanner must return the candidate of the
    first listed edge (the empty set when the list is empty).
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    neighbor_sets = [set(graph.neighbors(i).tolist())
                     for i in range(graph.num_vertices)]
    qualifying = []
    for i in range(graph.num_vertices):
        for j in graph.neighbors(i).tolist():
            if j <= i:
                continue
            shared = sorted(neighbor_sets[i] & neighbor_sets[j])
            if len(shared) != k - 2:
                continue
            if all(b in neighbor_sets[a]
                   for a, b in itertools.combinations(shared, 2)):
                qualifying.append(((i, j), tuple(shared)))
    return qualifying


@dataclass(frozen=True)
class VolumeEstimate:
    """Rejection-sampling estimate of a region volume inside a sampling box."""

    hits: int
    samples: int
    box_volume: float

    @property
    def fraction(self):
        return self.hits / self.samples

    @property
    def volume(self):
        return self.fraction * self.box_volume

    @property
    def stderr_fraction(self):
        p = self.fraction
        return float(np.sqrt(p * (1.0 - p) / self.samples))

    @property
    def stderr_volume(self):
        return self.stderr_fraction * self.box_volume


def monte_carlo_volume(predicate, d, samples, seed, lower=0.0, upper=1.0):
    """Unbiased rejection estimate of the volume where ``predicate`` holds.

    ``predicate`` maps an (m, d) array of points to a boolean array; points
    are uniform over the axis-aligned box [lower, upper]^d (scalars or
    per-axis arrays).  Standard error is sqrt(p(1-p)/samples).
    """
    if samples < 10_000:
        raise ValueError("at least 10^4 samples are required for a usable estimate")
    lower = np.broadcast_to(np.asarray(lower, dtype=float), (d,))
    upper = np.broadcast_to(np.asarray(upper, dtype=float), (d,))
    if np.any(upper <= lower):
        raise ValueError("upper bounds must exceed lower bounds")
    rng = np.random.default_rng(seed)
    box_volume = float(np.prod(upper - lower))
    hits = 0
    remaining = int(samples)
    while remaining > 0:
        batch = min(remaining, 1_000_000)
        points = lower + (upper - lower) * rng.random((batch, d))
        hits += int(np.count_nonzero(predicate(points)))
        remaining -= batch
    return VolumeEstimate(hits=hits, samples=int(samples), box_volume=box_volume)
