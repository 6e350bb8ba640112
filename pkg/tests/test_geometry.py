import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rggclique.geometry import (
    LensSpec,
    blocking_region_fraction,
    lens_contact_fraction,
    lens_volume_fraction,
    torus_distance,
    unit_ball_volume,
)
from rggclique.reference import monte_carlo_volume

# Closed-form contact-lens fraction in the plane: 2/3 - sqrt(3)/(2*pi)
PLANE_CONTACT_FRACTION = 2.0 / 3.0 - math.sqrt(3.0) / (2.0 * math.pi)


def coords(d):
    return st.lists(st.floats(min_value=0.0, max_value=1.0, exclude_max=True,
                              allow_nan=False), min_size=d, max_size=d)


class TestTorusDistance:
    def test_wraparound(self):
        assert torus_distance([0.9], [0.1]) == pytest.approx(0.2, abs=1e-15)

    def test_identity(self):
        for d in (1, 2, 3, 5):
            p = [0.3] * d
            assert torus_distance(p, p) == 0.0

    def test_maximal_wrap(self):
        assert torus_distance([0.0, 0.0], [0.5, 0.5]) == pytest.approx(
            math.sqrt(0.5), abs=1e-15)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            torus_distance([0.1, 0.2], [0.1])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            torus_distance([1.2], [0.1])

    @given(st.integers(1, 4).flatmap(lambda d: st.tuples(coords(d), coords(d), coords(d))))
    @settings(max_examples=150)
    def test_metric_axioms(self, triple):
        x, y, z = triple
        dxy = torus_distance(x, y)
        assert dxy == pytest.approx(torus_distance(y, x), abs=1e-12)
        assert dxy >= 0.0
        assert dxy <= math.sqrt(len(x)) / 2.0 + 1e-12
        assert dxy <= torus_distance(x, z) + torus_distance(z, y) + 1e-12

    @given(st.integers(1, 3).flatmap(lambda d: st.tuples(coords(d), coords(d), coords(d))))
    @settings(max_examples=100)
    def test_translation_invariance(self, triple):
        x, y, t = triple
        xs = [(a + b) % 1.0 for a, b in zip(x, t)]
        ys = [(a + b) % 1.0 for a, b in zip(y, t)]
        # the shift can push coordinates onto 1.0 through rounding; renormalize
        xs = [c % 1.0 for c in xs]
        ys = [c % 1.0 for c in ys]
        assert torus_distance(xs, ys) == pytest.approx(torus_distance(x, y), abs=1e-9)


class TestBallVolume:
    def test_known_dimensions(self):
        assert unit_ball_volume(1) == pytest.approx(2.0, rel=1e-15)
        assert unit_ball_volume(2) == pytest.approx(math.pi, rel=1e-15)
        assert unit_ball_volume(3) == pytest.approx(4.0 * math.pi / 3.0, rel=1e-15)

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            unit_ball_volume(0)

    @pytest.mark.parametrize("d", range(3, 9))
    def test_recursion(self, d):
        # independent identity: phi_d = 2*pi*phi_{d-2} / d
        assert unit_ball_volume(d) == pytest.approx(
            2.0 * math.pi * unit_ball_volume(d - 2) / d, rel=1e-12)


class TestLensFraction:
    @pytest.mark.parametrize("d", [1, 2, 3, 4, 6])
    def test_coincident_balls(self, d):
        assert lens_volume_fraction(LensSpec(x=0.0, r=0.1, d=d)) == pytest.approx(
            1.0, abs=1e-12)

    def test_plane_contact_closed_form(self):
        got = lens_volume_fraction(LensSpec(x=0.2, r=0.2, d=2))
        assert got == pytest.approx(PLANE_CONTACT_FRACTION, abs=1e-12)

    def test_line_contact(self):
        # interval overlap (2r - x) / 2r at x = r
        assert lens_volume_fraction(LensSpec(x=0.1, r=0.1, d=1)) == pytest.approx(
            0.5, abs=1e-15)

    def test_sphere_contact(self):
        assert lens_contact_fraction(3) == pytest.approx(5.0 / 16.0, abs=1e-12)

    @pytest.mark.parametrize("d", [1, 2, 3])
    def test_closed_forms_match_quadrature(self, d):
        from rggclique.geometry import _lens_fraction_quadrature

        for s in (0.0, 0.25, 0.5, 0.9, 1.0):
            closed = lens_volume_fraction(LensSpec(x=s * 0.2, r=0.2, d=d))
            assert closed == pytest.approx(_lens_fraction_quadrature(s, d), abs=1e-10)

    @pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
    def test_strictly_decreasing_in_x(self, d):
        r = 0.2
        xs = np.linspace(0.0, r, 30)
        values = [lens_volume_fraction(LensSpec(x=float(x), r=r, d=d)) for x in xs]
        assert all(a > b for a, b in zip(values, values[1:]))

    def test_scale_free(self):
        for r in (0.01, 0.08, 0.24):
            assert lens_volume_fraction(LensSpec(x=0.5 * r, r=r, d=3)) == pytest.approx(
                lens_volume_fraction(LensSpec(x=0.1, r=0.2, d=3)), rel=1e-12)

    def test_rejects_separated_centers(self):
        with pytest.raises(ValueError):
            LensSpec(x=0.21, r=0.2, d=2)

    def test_rejects_large_radius(self):
        with pytest.raises(ValueError):
            LensSpec(x=0.1, r=0.3, d=2)

    @pytest.mark.parametrize("d,seed", [(1, 11), (2, 12), (3, 13)])
    def test_contact_fraction_matches_rejection_sampling(self, d, seed):
        # rejection estimate over the bounding box of the two contact balls
        def in_lens(points):
            a = np.sum(points * points, axis=1)
            shifted = points.copy()
            shifted[:, 0] -= 1.0
            b = np.sum(shifted * shifted, axis=1)
            return (a <= 1.0) & (b <= 1.0)

        estimate = monte_carlo_volume(in_lens, d, 1_000_000, seed,
                                      lower=-1.0, upper=1.0)
        fraction = estimate.volume / unit_ball_volume(d)
        se = estimate.stderr_volume / unit_ball_volume(d)
        assert abs(fraction - lens_contact_fraction(d)) <= 3.0 * se


class TestBlockingRegion:
    def test_line_value_exact(self):
        # contact lens on the line is [0, r]; one outer quarter over ball length 2r
        assert blocking_region_fraction(1) == pytest.approx(0.125, abs=1e-15)

    def test_plane_value(self):
        closed = (math.pi / 6.0 - math.sqrt(3.0) / 2.0 + 0.5) / math.pi
        assert blocking_region_fraction(2) == pytest.approx(closed, abs=1e-12)

    def test_plane_value_matches_frozen_rejection_tabulation(self):
        # rejection-sampling tabulation, 1e7 samples, seed 20260809 (box
        # [0,1] x [1/2, sqrt(3)/2]): fraction 0.05014405, stderr 1.82e-05
        assert abs(blocking_region_fraction(2) - 0.05014405) <= 4.0 * 1.82e-05

    @pytest.mark.parametrize("d", [1, 2, 3, 4])
    def test_positive_and_inside_lens(self, d):
        c1 = blocking_region_fraction(d)
        assert 0.0 < c1 < lens_contact_fraction(d)

    @pytest.mark.parametrize("d", [2, 3])
    def test_cross_pairs_are_never_adjacent(self, d):
        # sample the two blocking regions at contact distance (unit radius,
        # centers 0 and e1) and check every cross pair is farther than 1
        rng = np.random.default_rng(99 + d)
        def sample_region(sign, count):
            points = []
            while len(points) < count:
                cand = rng.uniform(-1.0, 1.0, size=(4096, d))
                cand[:, 0] = rng.uniform(0.0, 1.0, size=4096)
                inside = (np.sum(cand * cand, axis=1) <= 1.0)
                shifted = cand.copy()
                shifted[:, 0] -= 1.0
                inside &= (np.sum(shifted * shifted, axis=1) <= 1.0)
                inside &= (sign * cand[:, 1] > 0.5)
                points.extend(cand[inside].tolist())
            return np.array(points[:count])

        first = sample_region(+1.0, 150)
        second = sample_region(-1.0, 150)
        gaps = np.linalg.norm(first[:, None, :] - second[None, :, :], axis=-1)
        assert np.all(gaps > 1.0)

    def test_quadrature_matches_plane_closed_form(self):
        from rggclique.geometry import _blocking_fraction_quadrature

        assert _blocking_fraction_quadrature(2) == pytest.approx(
            blocking_region_fraction(2), abs=1e-9)

    def test_sphere_value_matches_frozen_rejection_tabulation(self):
        # 4e6 samples, seed 7, box [0,1] x [1/2, sqrt(3)/2] x [-1,1]:
        # fraction 0.0299845, stderr 3.3e-05
        assert abs(blocking_region_fraction(3) - 0.0299845) <= 4.0 * 3.3e-05
