"""Frozen constants of the equianharmonic lattice (g2 = 0, g3 = 1).

The real period of p along the positive axis is w = Gamma(1/3)^3 / (2 pi);
its lattice is w times the Eisenstein integers. Everything else here is a
closed form in w: eta1 = 2 pi / (sqrt(3) w) (the half-period increment of
zeta), eta2 = e^{-i pi/3} eta1, the cubic roots e_j of 4x^3 = 1, and the
zero-direction constant r = 1/2 + i/(2 sqrt(3)) = (sqrt(3)/3) e^{i pi/6}.

Two independent computations of w are provided: the Gamma closed form
(stored literals, no runtime Gamma implementation) and direct quadrature of
the defining period integral in its Beta form.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

from . import quadrature

# Decimal literals computed ahead of time with a 50-digit arbitrary-precision
# evaluation of the Gamma function; stored to 40 digits (double rounds them).
GAMMA_THIRD = 2.678938534707747633655692940974677644129
GAMMA_TWO_THIRDS = 1.354117939426400416945288028154513785519

SQRT3 = math.sqrt(3.0)
OMEGA6 = cmath.exp(1j * math.pi / 3.0)  # e^{i pi/3}, the rotation unit


@dataclass(frozen=True)
class Constants:
    """Immutable bundle of lattice constants; built once via get_constants()."""

    varpi: float
    eta1: float
    eta2: complex
    e1: complex
    e2: complex
    e3: complex
    r: complex
    g2: float
    g3: float
    gamma_third: float


def varpi_from_gamma() -> float:
    """Real period from the closed form Gamma(1/3)^3 / (2 pi).

    The cube is spelled as repeated multiplication: each step is correctly
    rounded, unlike libm pow, so the result is identical across platforms.
    """
    return GAMMA_THIRD * GAMMA_THIRD * GAMMA_THIRD / (2.0 * math.pi)


def varpi_from_quadrature(tol: float) -> float:
    """Real period by direct quadrature of its Beta-form integral."""
    return varpi_quadrature_error(tol)[0]


def varpi_quadrature_error(tol: float) -> tuple[float, float]:
    """Real period and error estimate by quadrature of the Beta-form integral.

    w = (2^{1/3}/3) * Int_0^1 xi^{-5/6} (1-xi)^{-1/2} dxi. Both endpoint
    singularities are integrable; split at 1/2 and substitute xi = u^6 on
    the left (d xi = 6 u^5 du, integrand -> 6 (1-u^6)^{-1/2}) and
    1 - xi = v^2 on the right (integrand -> 2 (1-v^2)^{-5/6}), which makes
    both pieces smooth on their intervals.
    """
    if not 1e-13 <= tol <= 1e-6:
        raise ValueError("tol must lie in [1e-13, 1e-6]")
    left, el = quadrature.integrate(
        lambda u: 6.0 / math.sqrt(1.0 - u**6), 0.0, 2.0 ** (-1.0 / 6.0), tol / 2.0
    )
    right, er = quadrature.integrate(
        lambda v: 2.0 * (1.0 - v * v) ** (-5.0 / 6.0), 0.0, 2.0**-0.5, tol / 2.0
    )
    scale = 2.0 ** (1.0 / 3.0) / 3.0
    return scale * (left + right), scale * (el + er)


def varpi_from_first_form(tol: float) -> float:
    """Real period from the other display of the same integral.

    w = Int_{4^{-1/3}}^inf dx / sqrt(x^3 - 1/4). Substituting
    x = 4^{-1/3}/t^2 maps to 4^{2/3} Int_0^1 (1-t^6)^{-1/2} dt; the right
    half is smoothed with t = 1 - u^2, where the exact polynomial
    (1-(1-u^2)^6)/u^2 = 6 - 15u^2 + 20u^4 - 15u^6 + 6u^8 - u^10 avoids
    cancellation near u = 0.
    """
    if not 1e-13 <= tol <= 1e-6:
        raise ValueError("tol must lie in [1e-13, 1e-6]")
    left, _ = quadrature.integrate(
        lambda t: 1.0 / math.sqrt(1.0 - t**6), 0.0, 0.5, tol / 2.0
    )

    def right_integrand(u: float) -> float:
        u2 = u * u
        h = 6.0 + u2 * (-15.0 + u2 * (20.0 + u2 * (-15.0 + u2 * (6.0 - u2))))
        return 2.0 / math.sqrt(h)

    right, _ = quadrature.integrate(right_integrand, 0.0, math.sqrt(0.5), tol / 2.0)
    return 4.0 ** (2.0 / 3.0) * (left + right)


def eta() -> float:
    """eta1 = 2 pi / (sqrt(3) * varpi), the real-period increment of zeta."""
    return 2.0 * math.pi / (SQRT3 * varpi_from_gamma())


@lru_cache(maxsize=1)
def get_constants() -> Constants:
    varpi = varpi_from_gamma()
    eta1 = 2.0 * math.pi / (SQRT3 * varpi)
    e1 = complex(4.0 ** (-1.0 / 3.0), 0.0)
    return Constants(
        varpi=varpi,
        eta1=eta1,
        eta2=cmath.exp(-1j * math.pi / 3.0) * eta1,
        e1=e1,
        e2=e1 * cmath.exp(-2j * math.pi / 3.0),
        e3=e1 * cmath.exp(2j * math.pi / 3.0),
        r=complex(0.5, 0.5 / SQRT3),
        g2=0.0,
        g3=1.0,
        gamma_third=GAMMA_THIRD,
    )
