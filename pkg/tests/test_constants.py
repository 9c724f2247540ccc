import cmath
import math

import pytest

from hexwp import constants, wfun
from hexwp.constants import (
    GAMMA_THIRD,
    GAMMA_TWO_THIRDS,
    eta,
    get_constants,
    varpi_from_first_form,
    varpi_from_gamma,
    varpi_from_quadrature,
    varpi_quadrature_error,
)

SQRT3 = math.sqrt(3.0)


class TestInvariants:
    def test_cubic_roots(self, consts):
        assert abs(consts.e1 - 4.0 ** (-1.0 / 3.0)) <= 1e-15
        assert abs(consts.e2 - consts.e1 * cmath.exp(-2j * math.pi / 3.0)) <= 1e-15
        assert abs(consts.e3 - consts.e1 * cmath.exp(2j * math.pi / 3.0)) <= 1e-15
        assert abs(consts.e1 + consts.e2 + consts.e3) <= 1e-15
        for e in (consts.e1, consts.e2, consts.e3):
            assert abs(4.0 * e**3 - 1.0) <= 1e-15

    def test_eta_product(self, consts):
        assert abs(consts.eta1 * consts.varpi - 2.0 * math.pi / SQRT3) <= 1e-12

    def test_eta2_rotation(self, consts):
        assert abs(consts.eta2 - cmath.exp(-1j * math.pi / 3.0) * consts.eta1) <= 1e-15

    def test_r_exact(self, consts):
        assert consts.r == complex(0.5, 0.5 / SQRT3)
        assert abs(abs(consts.r) - 1.0 / SQRT3) <= 1e-15

    def test_r_inverse_identity(self, consts):
        r_inv = 1.0 / consts.r
        assert abs(r_inv - SQRT3 * cmath.exp(-1j * math.pi / 6.0)) <= 1e-15
        assert abs(r_inv - (1.0 + cmath.exp(-1j * math.pi / 3.0))) <= 1e-15

    def test_legendre(self, consts):
        lhs = consts.eta1 * cmath.exp(1j * math.pi / 3.0) * consts.varpi - consts.eta2 * consts.varpi
        assert abs(lhs - 2j * math.pi) <= 1e-12

    def test_invariants_g2_g3(self, consts):
        assert consts.g2 == 0.0
        assert consts.g3 == 1.0

    def test_cached_singleton(self, consts):
        assert get_constants() is consts


class TestVarpiFromGamma:
    def test_value(self):
        assert abs(varpi_from_gamma() - 3.0599080739) <= 1e-9

    def test_one_third(self):
        assert abs(varpi_from_gamma() / 3.0 - 1.0199693580) <= 1e-9

    def test_reflection_product(self):
        assert abs(GAMMA_THIRD * GAMMA_TWO_THIRDS - 2.0 * math.pi / SQRT3) <= 1e-12


class TestVarpiFromQuadrature:
    def test_agrees_with_gamma(self):
        assert abs(varpi_from_quadrature(1e-10) - varpi_from_gamma()) <= 1e-10

    def test_loose_tolerance(self):
        assert abs(varpi_from_quadrature(1e-6) - 3.059908) <= 1e-6

    def test_error_estimate_is_honest(self):
        value, estimate = varpi_quadrature_error(1e-10)
        assert abs(value - varpi_from_gamma()) <= max(estimate, 1e-10)

    def test_first_form_agrees(self):
        tol = 1e-10
        assert abs(varpi_from_first_form(tol) - varpi_from_quadrature(tol)) <= 2.0 * tol

    @pytest.mark.parametrize("tol", [1e-14, 1e-5, 0.0, -1e-9])
    def test_tolerance_guard(self, tol):
        with pytest.raises(ValueError):
            varpi_from_quadrature(tol)

    @pytest.mark.parametrize("tol", [1e-13, 1e-6])
    def test_tolerance_boundaries_accepted(self, tol):
        assert abs(varpi_from_quadrature(tol) - varpi_from_gamma()) <= max(tol, 1e-10)


class TestEta:
    def test_value(self):
        assert abs(eta() - 1.1855254) <= 1e-6

    def test_product(self, consts):
        assert abs(eta() * consts.varpi - 3.6275987285) <= 1e-10
        assert abs(eta() * consts.varpi - 2.0 * math.pi / SQRT3) <= 1e-12

    def test_matches_zeta_half_period(self, consts):
        half = complex(consts.varpi / 2.0, 0.0)
        assert abs(2.0 * wfun.zeta(half) - eta()) <= 1e-10


def test_module_freezes_literals():
    # the stored Gamma literals carry >= 30 digits
    assert len(repr(constants.GAMMA_THIRD)) >= 17  # full double precision
    assert GAMMA_THIRD == pytest.approx(2.678938534707747633, abs=1e-15)
    assert GAMMA_TWO_THIRDS == pytest.approx(1.354117939426400416, abs=1e-15)
