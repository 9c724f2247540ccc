import cmath
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hexwp import lattice, wfun
from hexwp._backend import kernels
from hexwp.errors import PoleProximity, SigmaOverflow
from hexwp.wfun import EvalOptions

SQRT3 = math.sqrt(3.0)


def rel(lhs, rhs):
    return abs(lhs - rhs) / (1.0 + abs(lhs) + abs(rhs))


class TestLaurentTable:
    def test_first_coefficients(self):
        tab = wfun.laurent_table(40)
        assert tab.c[2] == 0.0
        assert tab.c[3] == pytest.approx(1.0 / 28.0, rel=1e-15)
        assert tab.c[6] == pytest.approx(1.0 / 10192.0, rel=1e-14)

    def test_only_multiples_of_three_survive(self):
        tab = wfun.laurent_table(40)
        for k in range(2, 41):
            if k % 3 != 0:
                assert tab.c[k] == 0.0
            else:
                assert tab.c[k] != 0.0

    def test_order_guard(self):
        with pytest.raises(ValueError):
            wfun.laurent_table(8)


class TestSpecialValues:
    def test_p_at_half_period(self, consts):
        v = wfun.p(complex(consts.varpi / 2.0, 0.0))
        assert abs(v - 4.0 ** (-1.0 / 3.0)) <= 1e-12

    def test_p_at_third_period(self, consts):
        assert abs(wfun.p(complex(consts.varpi / 3.0, 0.0)) - 1.0) <= 1e-10

    def test_p_prime_at_third_periods(self, consts):
        assert abs(wfun.p_prime(complex(consts.varpi / 3.0, 0.0)) + SQRT3) <= 1e-10
        assert abs(wfun.p_prime(complex(2.0 * consts.varpi / 3.0, 0.0)) - SQRT3) <= 1e-10

    def test_p_prime_vanishes_at_half_periods(self, consts):
        u = cmath.exp(1j * math.pi / 3.0)
        for h in (consts.varpi / 2.0 + 0j, u * consts.varpi / 2.0, (1 + u) * consts.varpi / 2.0):
            assert abs(wfun.p_prime(h)) <= 1e-12

    def test_p_at_half_periods_hits_cubic_roots(self, consts):
        u = cmath.exp(1j * math.pi / 3.0)
        assert abs(wfun.p(u * consts.varpi / 2.0) - consts.e2) <= 1e-12
        assert abs(wfun.p((1 + u) * consts.varpi / 2.0) - consts.e3) <= 1e-12

    def test_p_vanishes_at_triangle_centers(self, consts):
        rw = consts.r * consts.varpi
        assert abs(wfun.p(rw)) <= 1e-10
        assert abs(wfun.p(2.0 * rw)) <= 1e-10

    def test_zeta_at_half_period(self, consts):
        v = wfun.zeta(complex(consts.varpi / 2.0, 0.0))
        assert abs(v - consts.eta1 / 2.0) <= 1e-10

    def test_p_doubleprime_values(self, consts):
        assert abs(wfun.p_doubleprime(complex(consts.varpi / 3.0, 0.0)) - 6.0) <= 1e-9
        assert abs(wfun.p_doubleprime(consts.r * consts.varpi)) <= 1e-9

    def test_sigma_at_origin(self):
        assert wfun.sigma(0j) == 0j

    def test_sigma_slope_at_origin(self):
        h = 1e-5
        d = (wfun.sigma(complex(h, 0.0)) - wfun.sigma(complex(-h, 0.0))) / (2.0 * h)
        assert abs(d - 1.0) <= 1e-9


class TestDifferentialStructure:
    def test_ode_cubic(self, rng, period_lattice, opts, cell_sampler):
        for z in cell_sampler(rng, 200, period_lattice, opts.margin()):
            pv, dv = wfun.p_pair(z)
            assert rel(dv * dv, 4.0 * pv**3 - 1.0) <= 1e-12

    def test_zeta_derivative_is_minus_p(self, rng, period_lattice, opts, cell_sampler):
        h = 1e-5
        for z in cell_sampler(rng, 50, period_lattice, opts.margin() * 1.01):
            fd = (wfun.zeta(z + h) - wfun.zeta(z - h)) / (2.0 * h)
            assert rel(fd, -wfun.p(z)) <= 1e-6

    def test_sigma_log_derivative_is_zeta(self, rng, period_lattice, opts, cell_sampler):
        h = 1e-5
        for z in cell_sampler(rng, 50, period_lattice, opts.margin() * 1.01):
            fd = (wfun.sigma(z + h) - wfun.sigma(z - h)) / (2.0 * h * wfun.sigma(z))
            assert rel(fd, wfun.zeta(z)) <= 1e-6

    def test_p_prime_is_derivative_of_p(self, rng, period_lattice, opts, cell_sampler):
        h = 1e-5
        for z in cell_sampler(rng, 50, period_lattice, opts.margin() * 1.01):
            fd = (wfun.p(z + h) - wfun.p(z - h)) / (2.0 * h)
            assert rel(fd, wfun.p_prime(z)) <= 1e-6


class TestDuplication:
    def test_duplication_map_consistency(self, rng, period_lattice, opts, cell_sampler):
        # doubling via the rational map on p must match direct evaluation
        for z in cell_sampler(rng, 100, period_lattice, opts.margin()):
            if lattice.dist_to_lattice(2.0 * z, period_lattice) < opts.margin():
                continue
            w = wfun.p(z)
            num = w * (w**3 + 2.0)
            den = 4.0 * w**3 - 1.0
            if abs(den) < 1e-6:
                continue
            assert rel(wfun.p(2.0 * z), num / den) <= 1e-10

    def test_halving_threshold_consistency(self, rng, period_lattice, cell_sampler):
        # same values whether the series is entered at |u| <= 0.45 or 0.30
        tight = EvalOptions(halving_threshold=0.30)
        loose = EvalOptions(halving_threshold=0.45)
        for z in cell_sampler(rng, 100, period_lattice, loose.margin()):
            p_t, d_t = wfun.p_pair(z, tight)
            p_l, d_l = wfun.p_pair(z, loose)
            assert rel(p_t, p_l) <= 1e-11
            assert rel(d_t, d_l) <= 1e-11

    def test_series_order_consistency(self, rng, period_lattice, cell_sampler):
        low = EvalOptions(series_order=30)
        high = EvalOptions(series_order=40)
        for z in cell_sampler(rng, 50, period_lattice, low.margin()):
            assert rel(wfun.p(z, low), wfun.p(z, high)) <= 1e-12
            assert rel(wfun.sigma(z, low), wfun.sigma(z, high)) <= 1e-12
            assert rel(wfun.zeta(z, low), wfun.zeta(z, high)) <= 1e-12


class TestSigmaQuasiPeriodicity:
    @given(
        m=st.integers(-3, 3),
        n=st.integers(-3, 3),
        s=st.floats(0.1, 0.9),
        t=st.floats(0.1, 0.9),
    )
    def test_general_law_matches_iterated_single_steps(self, consts, period_lattice, m, n, s, t):
        # sigma(z + m*w + n*u*w) via the evaluator equals the literal
        # composition of the two one-period laws applied |m| + |n| times
        z = lattice.cell_point(lattice.CellCoords(s, t), period_lattice)
        u = cmath.exp(1j * math.pi / 3.0)
        w = consts.varpi
        e_half = math.exp(math.pi / SQRT3)

        val = wfun.sigma(z)
        cur = z
        for _ in range(abs(m)):
            if m > 0:
                val = -e_half * cmath.exp(consts.eta1 * cur) * val
                cur += w
            else:
                cur -= w
                val = -val / (e_half * cmath.exp(consts.eta1 * cur))
        for _ in range(abs(n)):
            if n > 0:
                val = -e_half * cmath.exp(consts.eta2 * cur) * val
                cur += u * w
            else:
                cur -= u * w
                val = -val / (e_half * cmath.exp(consts.eta2 * cur))

        direct = wfun.sigma(z + m * w + n * u * w)
        assert rel(direct, val) <= 1e-9

    def test_sign_character(self, consts, period_lattice):
        # the prefactor sign is (-1)^{m+n+mn}: antiperiodic-like for
        # primitive translations, periodic-like when both indices are odd
        z = lattice.cell_point(lattice.CellCoords(0.31, 0.17), period_lattice)
        u = cmath.exp(1j * math.pi / 3.0)
        w = consts.varpi
        for m, n in [(1, 0), (0, 1), (1, 1), (2, 1), (-1, 2), (3, -2)]:
            omega = m * w + n * u * w
            eta_omega = m * consts.eta1 + n * consts.eta2
            eps = (-1.0) ** (m + n + m * n)
            lhs = wfun.sigma(z + omega)
            rhs = eps * cmath.exp(eta_omega * (z + omega / 2.0)) * wfun.sigma(z)
            assert rel(lhs, rhs) <= 1e-10


class TestGuards:
    def test_pole_proximity(self, consts):
        with pytest.raises(PoleProximity):
            wfun.p(complex(0.01 * consts.varpi, 0.0))
        with pytest.raises(PoleProximity):
            wfun.zeta(complex(consts.varpi, 1e-9))

    def test_custom_margin(self, consts):
        z = complex(0.03 * consts.varpi, 0.0)
        with pytest.raises(PoleProximity):
            wfun.p(z)
        narrow = EvalOptions(pole_margin=0.01 * consts.varpi)
        assert abs(wfun.p(z, narrow)) > 100.0  # close to the double pole

    def test_sigma_overflow(self):
        with pytest.raises(SigmaOverflow):
            wfun.sigma(complex(70.0, 0.0))

    def test_sigma_no_pole_guard(self, consts):
        # sigma is entire: lattice-adjacent arguments are fine
        v = wfun.sigma(complex(1e-3, 0.0))
        assert abs(v - 1e-3) <= 1e-9

    def test_oracle_radius_guard(self, consts):
        z = complex(consts.varpi / 2.0, 0.0)
        with pytest.raises(ValueError):
            wfun.p_oracle(z, 2.0)

    def test_eval_options_validation(self):
        with pytest.raises(ValueError):
            EvalOptions(series_order=4)
        with pytest.raises(ValueError):
            EvalOptions(halving_threshold=1.5)
        with pytest.raises(ValueError):
            EvalOptions(pole_margin=-0.1)
        with pytest.raises(ValueError):
            EvalOptions(oracle_radius=0.0)


class TestOracleAgreement:
    def test_all_functions_at_radius_25(self, rng, period_lattice, opts, cell_sampler):
        for z in cell_sampler(rng, 20, period_lattice, opts.margin()):
            assert rel(wfun.p(z), wfun.p_oracle(z, 25.0)) <= 5e-3
            assert rel(wfun.p_prime(z), wfun.p_prime_oracle(z, 25.0)) <= 5e-3
            assert rel(wfun.zeta(z), wfun.zeta_oracle(z, 25.0)) <= 5e-3
            assert rel(wfun.sigma(z), wfun.sigma_oracle(z, 25.0)) <= 5e-3

    def test_error_shrinks_with_radius(self, rng, period_lattice, opts, cell_sampler):
        pts = cell_sampler(rng, 10, period_lattice, opts.margin())
        worst = []
        for radius in (25.0, 50.0, 100.0):
            worst.append(max(rel(wfun.p(z), wfun.p_oracle(z, radius)) for z in pts))
        assert worst[0] >= worst[1] >= worst[2]


class TestRealLine:
    def test_shape_on_real_axis(self, consts, opts):
        margin = opts.margin()
        xs = [margin + k * (consts.varpi - 2 * margin) / 60.0 for k in range(61)]
        half = consts.varpi / 2.0
        prev_zeta = None
        for x in xs:
            z = complex(x, 0.0)
            pv, dv = wfun.p_pair(z)
            zv = wfun.zeta(z)
            sv = wfun.sigma(z)
            assert pv.imag == 0.0
            assert dv.imag == 0.0
            assert zv.imag == 0.0
            assert sv.imag == 0.0
            assert pv.real >= consts.e1.real - 1e-12
            assert sv.real > 0.0
            if x < half - 0.05:
                assert dv.real < 0.0
            if x > half + 0.05:
                assert dv.real > 0.0
            if prev_zeta is not None:
                assert zv.real < prev_zeta
            prev_zeta = zv.real


class TestBackends:
    def test_backend_reports_identity(self):
        from hexwp import _kernels_py

        assert kernels.BACKEND_NAME in ("compiled", "python")
        assert _kernels_py.BACKEND_NAME == "python"

    def test_backends_bitwise_agree(self, consts):
        from hexwp import _kernels_py

        if kernels is _kernels_py:
            pytest.skip("compiled backend not available")
        pc, dc, zc, ec = wfun._series_arrays(40)
        z = complex(0.8123, 0.4567)
        a = kernels.wp_pair(z, consts.varpi, pc, dc, 0.45)
        b = _kernels_py.wp_pair(z, consts.varpi, pc, dc, 0.45)
        assert a == b
        assert kernels.sigma_value(z, consts.varpi, consts.eta1, consts.eta2, ec) == (
            _kernels_py.sigma_value(z, consts.varpi, consts.eta1, consts.eta2, ec)
        )
        assert kernels.zeta_value(z, consts.varpi, consts.eta1, consts.eta2, zc) == (
            _kernels_py.zeta_value(z, consts.varpi, consts.eta1, consts.eta2, zc)
        )
