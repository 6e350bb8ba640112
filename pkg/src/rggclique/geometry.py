"""Flat-torus geometry: the wrap-around metric, ball and lens volumes, and the
two scale-free overlap constants used by the recovery-threshold machinery.

Radii are kept below 1/4 throughout, so a ball never wraps onto itself and
plain Euclidean volume formulas apply on the torus.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import integrate

MAX_RADIUS = 0.25


def as_point(coords):
    """Validate a torus point and return it as a float array.

    A point is a 1-d sequence of coordinates, each in [0, 1) (canonical
    representatives on the unit torus).
    """
    p = np.asarray(coords, dtype=float)
    if p.ndim != 1 or p.size < 1:
        raise ValueError("a point is a 1-d sequence with at least one coordinate")
    if np.any(p < 0.0) or np.any(p >= 1.0):
        raise ValueError("torus coordinates must lie in [0, 1)")
    return p


def torus_distance(x, y):
    """L2 distance on the unit torus: per-axis deltas min(|u|, 1-|u|)."""
    px = as_point(x)
    py = as_point(y)
    if px.shape != py.shape:
        raise ValueError(f"dimension mismatch: {px.size} vs {py.size}")
    delta = np.abs(px - py)
    delta = np.minimum(delta, 1.0 - delta)
    return float(math.sqrt(float(np.dot(delta, delta))))


def torus_deltas(diff):
    """Wrap-around component deltas for an array of raw coordinate differences."""
    delta = np.abs(diff)
    return np.minimum(delta, 1.0 - delta)


def unit_ball_volume(d):
    """Volume of the d-dimensional unit ball, pi^(d/2) / Gamma(d/2 + 1)."""
    if d < 1:
        raise ValueError("dimension must be a positive integer")
    return _ball_volume(d)


def _ball_volume(d):
    # also valid at d = 0 (a point has volume 1), used by the cap quadrature
    return math.pi ** (d / 2.0) / math.gamma(d / 2.0 + 1.0)


@dataclass(frozen=True)
class LensSpec:
    """Two equal balls of radius ``r`` with centers ``x`` apart, in dimension ``d``.

    Requires 0 <= x <= r < 1/4 so the overlap region (the lens) is nonempty
    and wrap-free.
    """

    x: float
    r: float
    d: int

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("dimension must be a positive integer")
        if not 0.0 < self.r < MAX_RADIUS:
            raise ValueError(f"radius must lie in (0, {MAX_RADIUS})")
        if self.x < 0.0:
            raise ValueError("center distance must be non-negative")
        if self.x > self.r:
            raise ValueError("center distance above the radius: endpoints not adjacent")


def lens_volume_fraction(spec: LensSpec):
    """Volume of the two-ball intersection as a fraction of one ball's volume.

    Closed forms for d in {1, 2, 3}; 1-d quadrature over the cap profile for
    d >= 4.  Equals 1 at x=0 and decreases monotonically to the contact value
    at x=r.
    """
    s = spec.x / spec.r  # scale-free: fraction depends on x/r only
    d = spec.d
    if d == 1:
        return 1.0 - 0.5 * s
    if d == 2:
        return (2.0 * math.acos(0.5 * s) - 0.5 * s * math.sqrt(4.0 - s * s)) / math.pi
    if d == 3:
        # two unit spheres at distance s: V = pi (4 + s)(2 - s)^2 / 12
        return (4.0 + s) * (2.0 - s) ** 2 / 16.0
    return _lens_fraction_quadrature(s, d)


def _lens_fraction_quadrature(s, d):
    # lens = two spherical caps cut at distance s/2 from the centers (unit radius)
    profile = lambda u: (1.0 - u * u) ** ((d - 1) / 2.0)
    cap, _err = integrate.quad(profile, 0.5 * s, 1.0, epsabs=1e-12, epsrel=1e-12)
    return 2.0 * cap * _ball_volume(d - 1) / _ball_volume(d)


@lru_cache(maxsize=None)
def lens_contact_fraction(d):
    """Lens fraction when the centers are exactly one radius apart.

    This is the smallest value the lens fraction takes over admissible center
    distances, and the constant scaling the common-neighbor intensity at the
    far end of an edge.
    """
    if d < 1:
        raise ValueError("dimension must be a positive integer")
    probe = 0.2  # any radius below 1/4; the fraction is scale-free
    return lens_volume_fraction(LensSpec(x=probe, r=probe, d=d))


@lru_cache(maxsize=None)
def blocking_region_fraction(d):
    """Volume fraction (of one ball) of a blocking region inside the contact lens.

    With ball centers one radius apart along the first axis, the blocking
    regions are the lens points whose second coordinate exceeds +r/2 (resp.
    falls below -r/2).  For d >= 2 any point of one region is farther than r
    from any point of the other, so cross pairs can never be adjacent.  In
    d=1 there is no orthogonal direction and the guarantee degenerates at
    contact distance; the region is taken to be the outer quarter of the
    lens at each end, which keeps the measure positive and scale-free.

    The value is construction-dependent; callers that need a different
    convention can override it where it is consumed.
    """
    if d < 1:
        raise ValueError("dimension must be a positive integer")
    if d == 1:
        # lens at contact = [0, r]; one region = its outer quarter (r/4 long)
        return 0.125
    if d == 2:
        # area of {p : |p| <= 1, |p - e1| <= 1, p_y > 1/2} = pi/6 - sqrt(3)/2 + 1/2
        return (math.pi / 6.0 - math.sqrt(3.0) / 2.0 + 0.5) / math.pi
    return _blocking_fraction_quadrature(d)


def _blocking_fraction_quadrature(d):
    # Unit radius, centers at 0 and e1.  Integrate the (d-2)-ball cross-section
    # over the first two coordinates of {lens, y > 1/2}.
    low_d = _ball_volume(d - 2)

    def cross_section(x, y):
        s2 = 1.0 - y * y - max(x * x, (x - 1.0) ** 2)
        if s2 <= 0.0:
            return 0.0
        return low_d * s2 ** ((d - 2) / 2.0)

    y_hi = math.sqrt(3.0) / 2.0
    vol, _err = integrate.dblquad(
        cross_section,
        0.5,
        y_hi,
        lambda y: 1.0 - math.sqrt(1.0 - y * y),
        lambda y: math.sqrt(1.0 - y * y),
        epsabs=1e-10,
        epsrel=1e-10,
    )
    return vol / unit_ball_volume(d)
