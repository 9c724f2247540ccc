"""Uniformization of x^3 + y^3 = 1: values, derivative, poles, triple points."""

import cmath
import math

import numpy as np
import pytest

from hexwp import analysis, fermat, identities, wfun
from hexwp.errors import NearPoleOfF, NearZeroDenominator
from hexwp.wfun import EvalOptions

SQRT3 = math.sqrt(3.0)
CBRT4_HALF = 0.7937005259840997  # 4^{1/3}/2 = f(w/2)


class TestSpecialValues:
    def test_zero_at_third_period(self, consts):
        assert abs(fermat.f(complex(consts.varpi / 3.0, 0.0))) <= 1e-9

    def test_one_at_negated_third_period(self, consts):
        assert abs(fermat.f(complex(-consts.varpi / 3.0, 0.0)) - 1.0) <= 1e-9

    def test_value_at_half_period(self, consts):
        assert abs(fermat.f(complex(consts.varpi / 2.0, 0.0)) - CBRT4_HALF) <= 1e-10

    def test_derivative_vanishes_at_triple_point(self, consts):
        assert abs(fermat.f_prime(complex(-consts.varpi / 3.0, 0.0))) <= 1e-8

    def test_derivative_at_half_period_matches_difference_quotient(self, consts):
        z = complex(consts.varpi / 2.0, 0.0)
        h = 1e-5
        fd = (fermat.f(z + h) - fermat.f(z - h)) / (2.0 * h)
        assert abs(fermat.f_prime(z) - fd) <= 1e-6


class TestDerivative:
    def test_matches_central_differences_in_cell(self, opts):
        rng = np.random.default_rng(2718)
        h = 1e-5
        # stay a step away from both the lattice poles and the zeros of p
        pts = identities.sample_cell(
            rng, 100, opts, exclude=tuple(analysis.zeros_of_p())
        )
        for z in pts:
            fd = (fermat.f(z + h) - fermat.f(z - h)) / (2.0 * h)
            dv = fermat.f_prime(z)
            assert abs(dv - fd) <= 1e-6 * (1.0 + abs(dv))


class TestUniformize:
    def test_third_period_gives_axis_point(self, consts):
        pt = fermat.uniformize(complex(consts.varpi / 3.0, 0.0))
        assert abs(pt.x) <= 1e-9
        assert abs(pt.y - 1.0) <= 1e-9
        assert pt.residual() <= 1e-9

    def test_negation_swaps_coordinates(self, consts):
        pt = fermat.uniformize(complex(-consts.varpi / 3.0, 0.0))
        assert abs(pt.x - 1.0) <= 1e-9
        assert abs(pt.y) <= 1e-9

    def test_generic_point_on_curve(self, consts):
        pt = fermat.uniformize(consts.varpi * complex(0.41, 0.17))
        assert pt.residual() <= 1e-9

    def test_seeded_points_on_curve(self, opts):
        rng = np.random.default_rng(31415)
        pts = identities.sample_cell(
            rng, 300, opts, exclude=tuple(analysis.zeros_of_p())
        )
        for z in pts:
            assert fermat.uniformize(z).residual() <= 1e-9


class TestBakerPair:
    def test_half_period_values(self, consts):
        pt = fermat.baker_pair(complex(consts.varpi / 2.0, 0.0))
        assert abs(pt.x - 2.0 * consts.e1) <= 1e-12
        assert abs(pt.y - (-1.0)) <= 1e-12
        assert pt.residual() <= 1e-12

    def test_denominator_guard(self, consts):
        # p' + sqrt(3) vanishes at w/3
        with pytest.raises(NearZeroDenominator):
            fermat.baker_pair(complex(consts.varpi / 3.0, 0.0))

    def test_seeded_points_on_curve(self, opts):
        rng = np.random.default_rng(92653)
        excl = tuple(analysis.zeros_of_dp_shifted(+1))
        pts = identities.sample_cell(rng, 300, opts, exclude=excl)
        for z in pts:
            assert fermat.baker_pair(z).residual() <= 1e-9


class TestPoles:
    def test_pole_at_zero_of_p(self, consts):
        with pytest.raises(NearPoleOfF):
            fermat.f(consts.r * consts.varpi)
        with pytest.raises(NearPoleOfF):
            fermat.f_prime(consts.r * consts.varpi)

    def test_large_values_cluster_at_poles(self, consts, period_lattice):
        # |f| > 50 on a cell grid only happens near 0, r*w, or 2r*w
        from hexwp import lattice as lat_mod
        from hexwp.errors import HexwpError

        opts = EvalOptions(pole_margin=1e-6)
        pole_reps = [0j] + analysis.zeros_of_p()
        n = 400
        hits = 0
        for j in range(n):
            for i in range(n):
                z = lat_mod.cell_point(
                    lat_mod.CellCoords((i + 0.5) / n, (j + 0.5) / n), period_lattice
                )
                try:
                    val = fermat.f(z, opts)
                except HexwpError:
                    continue
                if abs(val) > 50.0:
                    hits += 1
                    d = min(analysis.dist_mod_lattice(z, q) for q in pole_reps)
                    assert d <= 0.05 * consts.varpi
        assert hits > 0

    def test_blowup_rate_near_each_pole(self, consts):
        # both pole families are simple: stepping 10x closer gains 10x in |f|
        opts = EvalOptions(pole_margin=1e-6)
        for q in [0j] + analysis.zeros_of_p():
            near = abs(fermat.f(q + 3e-4 * cmath.exp(0.4j), opts))
            nearer = abs(fermat.f(q + 3e-5 * cmath.exp(0.4j), opts))
            assert near > 1e3
            assert 5.0 <= nearer / near <= 20.0


class TestTriplePoints:
    def test_rotates_hit_distinct_cube_roots(self, consts):
        roots = [cmath.exp(2j * math.pi * k / 3.0) for k in range(3)]
        seen = set()
        for k in range(3):
            z = -(consts.varpi / 3.0) * cmath.exp(2j * math.pi * k / 3.0)
            val = fermat.f(z)
            nearest = min(range(3), key=lambda i: abs(val - roots[i]))
            assert abs(val - roots[nearest]) <= 1e-9
            assert abs(fermat.f_prime(z)) <= 1e-8
            seen.add(nearest)
        assert len(seen) == 3
