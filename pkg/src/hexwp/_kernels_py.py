"""Pure-Python kernel backend.

Reference implementations of the hot numerical paths: the scalar
reduce/halve/series/duplicate pipeline for (p, p') and the series sides of
sigma/zeta, plus the truncated lattice sums used as slow oracles. The
compiled backend (_kernels_c) mirrors these signatures exactly; either can
serve the package, and results agree to the documented tolerances (bitwise
equality across backends is not a contract).

Scalar kernels take plain floats/complex plus coefficient arrays; lattice
sums take a precomputed complex array of nonzero lattice points in complete
shell order. Summation order is fixed by the caller-provided array, so each
backend is run-to-run deterministic.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

_SQRT3 = math.sqrt(3.0)
_HALF_SQRT3 = _SQRT3 / 2.0

BACKEND_NAME = "python"


def _nearest(zr: float, zi: float, varpi: float) -> tuple[int, int]:
    # Nearest lattice point in Eisenstein coordinates; the four corners of
    # the containing cell always include it.
    t = zi * 2.0 / (_SQRT3 * varpi)
    s = zr / varpi - 0.5 * t
    m0 = math.floor(s)
    n0 = math.floor(t)
    best = math.inf
    bm = m0
    bn = n0
    for dm in (0, 1):
        for dn in (0, 1):
            m = m0 + dm
            n = n0 + dn
            dr = zr - (m + 0.5 * n) * varpi
            di = zi - n * _HALF_SQRT3 * varpi
            d = dr * dr + di * di
            if d < best:
                best = d
                bm = m
                bn = n
    return bm, bn


def _horner(coef: np.ndarray, w: complex) -> complex:
    acc = 0j
    for i in range(len(coef) - 1, -1, -1):
        acc = acc * w + coef[i]
    return acc


def wp_pair(
    z: complex, varpi: float, pcoef: np.ndarray, dcoef: np.ndarray, threshold: float
) -> tuple[complex, complex]:
    """(p(z), p'(z)) via reduction, halving, Laurent series and duplication.

    z must not sit on the lattice (the wrapper enforces the pole margin).
    """
    m, n = _nearest(z.real, z.imag, varpi)
    z0 = complex(z.real - (m + 0.5 * n) * varpi, z.imag - n * _HALF_SQRT3 * varpi)
    h = 0
    az = abs(z0)
    while az > threshold and h < 8:
        az *= 0.5
        h += 1
    u = z0 / (2.0**h)
    w = u * u
    p = 1.0 / w + _horner(pcoef, w)
    dp = -2.0 / (w * u) + u * _horner(dcoef, w)
    for _ in range(h):
        # Duplication: p(2u) = g(p(u)) with g(w) = w(w^3+2)/(4w^3-1);
        # the derivative rides along via p'(2u) = g'(p(u)) p'(u) / 2,
        # never through the square root of the cubic (branchless).
        w3 = p * p * p
        den = 4.0 * w3 - 1.0
        pn = p * (w3 + 2.0) / den
        dp = (4.0 * w3 * w3 - 20.0 * w3 - 2.0) / (den * den) * dp * 0.5
        p = pn
    return p, dp


def sigma_value(
    z: complex,
    varpi: float,
    eta1: float,
    eta2: complex,
    ecoef: np.ndarray,
) -> complex:
    """sigma(z) via quasi-periodic reduction and the exponential series.

    Near 0: sigma(u) = u * exp(-E(u^2)) with E the even series built from
    the Laurent table. A lattice translation by w = m*varpi + n*e^{i pi/3}*varpi
    multiplies sigma by eps * exp(eta_w (z0 + w/2)), eps = (-1)^{m+n+mn}.
    Raises OverflowError when that prefactor exceeds double range.
    """
    m, n = _nearest(z.real, z.imag, varpi)
    om = complex((m + 0.5 * n) * varpi, n * _HALF_SQRT3 * varpi)
    z0 = z - om
    w = z0 * z0
    base = z0 * cmath.exp(-_horner(ecoef, w))
    if m == 0 and n == 0:
        return base
    eta_w = m * eta1 + n * eta2
    arg = eta_w * (z0 + 0.5 * om)
    if arg.real > 700.0:
        raise OverflowError("sigma translation prefactor exceeds double range")
    eps = -1.0 if (m + n + m * n) % 2 else 1.0
    return eps * cmath.exp(arg) * base


def zeta_value(
    z: complex,
    varpi: float,
    eta1: float,
    eta2: complex,
    zcoef: np.ndarray,
) -> complex:
    """zeta(z) = 1/z0 - z0*Z(z0^2) + m*eta1 + n*eta2 after lattice reduction."""
    m, n = _nearest(z.real, z.imag, varpi)
    z0 = complex(z.real - (m + 0.5 * n) * varpi, z.imag - n * _HALF_SQRT3 * varpi)
    w = z0 * z0
    return 1.0 / z0 - z0 * _horner(zcoef, w) + m * eta1 + n * eta2


# ---------------------------------------------------------------------------
# Truncated lattice sums (slow oracles). pts is the complex array of nonzero
# lattice points over complete shells; numpy's pairwise reduction over a
# fixed array is deterministic.
# ---------------------------------------------------------------------------


def p_oracle_sum(z: complex, pts: np.ndarray) -> complex:
    d = z - pts
    return 1.0 / (z * z) + complex(np.sum(1.0 / (d * d) - 1.0 / (pts * pts)))


def dp_oracle_sum(z: complex, pts: np.ndarray) -> complex:
    d = z - pts
    return -2.0 / (z * z * z) + complex(np.sum(-2.0 / (d * d * d)))


def zeta_oracle_sum(z: complex, pts: np.ndarray) -> complex:
    return 1.0 / z + complex(np.sum(1.0 / (z - pts) + 1.0 / pts + z / (pts * pts)))


def sigma_oracle_prod(z: complex, pts: np.ndarray) -> complex:
    # z * prod (1 - z/w) e^{z/w + (z/w)^2/2}; the exponential factors are
    # accumulated as exp(sum ...) which is the same product with fewer
    # roundings.
    q = z / pts
    return z * complex(np.prod(1.0 - q)) * cmath.exp(complex(np.sum(q + 0.5 * q * q)))


def inverse_cubic_sum(pts: np.ndarray) -> complex:
    """Sum of 1/((1-2k)k^2) over the provided nonzero Eisenstein points k."""
    return complex(np.sum(1.0 / ((1.0 - 2.0 * pts) * pts * pts)))
