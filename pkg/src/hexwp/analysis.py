"""Quantitative results beyond pointwise identities.

Newton rediscovery of the closed-form zero sets of p and of p' -+ sqrt(3),
the Eisenstein cubic lattice sum whose value is 2 pi/sqrt(3) - 4, the
one-third-period definite integral, and the eight half-argument candidate
values of p(z/2).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import lattice, quadrature, wfun
from ._backend import kernels
from .constants import get_constants
from .errors import DerivativeVanishes, NoConvergence, PoleProximity
from .wfun import EvalOptions

_SQRT3 = math.sqrt(3.0)


class RootTarget(Enum):
    P = "p"
    DP_PLUS_SQRT3 = "dp-plus"
    DP_MINUS_SQRT3 = "dp-minus"


@dataclass(frozen=True)
class RootResult:
    target: RootTarget
    closed_form: complex
    refined: complex
    iterations: int
    converged: bool


@dataclass(frozen=True)
class SumResult:
    radius: float
    partial_sum: complex
    target: complex  # 2 pi/sqrt(3) - 4
    abs_error: float


def zeros_of_p() -> list[complex]:
    """Cell representatives of the zeros of p: r*w and 2r*w.

    They are the centers of the two equilateral halves of the cell; the six
    rotates e^{i l pi/3} r w form a regular hexagon of modulus w/sqrt(3).
    """
    c = get_constants()
    rw = c.r * c.varpi
    return [rw, 2.0 * rw]


def zeros_of_dp_shifted(sign: int) -> list[complex]:
    """Cell representatives of the zeros of p'(z) + sign*sqrt(3).

    sign=+1: {w/3, e^{i pi/3} 2w/3, e^{2i pi/3} w/3}; sign=-1 is the
    negated set mod lattice (p' is odd).
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    w = get_constants().varpi
    u1 = cmath.exp(1j * math.pi / 3.0)
    u2 = cmath.exp(2j * math.pi / 3.0)
    if sign == 1:
        return [complex(w / 3.0, 0.0), u1 * (2.0 * w / 3.0), u2 * (w / 3.0)]
    return [complex(2.0 * w / 3.0, 0.0), u1 * (w / 3.0), u2 * (2.0 * w / 3.0)]


def _target_funcs(target: RootTarget, z: complex, options: EvalOptions | None):
    pv, dv = wfun.p_pair(z, options)
    if target is RootTarget.P:
        return pv, dv
    ddv = 6.0 * pv * pv
    if target is RootTarget.DP_PLUS_SQRT3:
        return dv + _SQRT3, ddv
    return dv - _SQRT3, ddv


def _closed_form_set(target: RootTarget) -> list[complex]:
    if target is RootTarget.P:
        return zeros_of_p()
    if target is RootTarget.DP_PLUS_SQRT3:
        return zeros_of_dp_shifted(+1)
    return zeros_of_dp_shifted(-1)


def _nearest_mod_lattice(z: complex, candidates: list[complex]) -> complex:
    lat = lattice.HexLattice(scale=get_constants().varpi)
    best = candidates[0]
    best_d = math.inf
    for q in candidates:
        d = lattice.dist_to_lattice(z - q, lat)
        if d < best_d:
            best_d = d
            best = q
    return best


def dist_mod_lattice(z: complex, q: complex) -> float:
    """Distance from z to q modulo the period lattice."""
    lat = lattice.HexLattice(scale=get_constants().varpi)
    return lattice.dist_to_lattice(z - q, lat)


def newton_refine(
    target: RootTarget,
    seed_point: complex,
    tol: float = 1e-10,
    max_iter: int = 25,
    options: EvalOptions | None = None,
) -> RootResult:
    """Polish a root of the target function by complex Newton iteration.

    Derivatives are analytic (p' for p; p'' = 6 p^2 for p' -+ sqrt(3)).
    Raises DerivativeVanishes when |derivative| < 1e-14 at an iterate and
    NoConvergence (carrying the last iterate) when max_iter is exhausted.
    """
    z = seed_point
    for it in range(1, max_iter + 1):
        fv, dv = _target_funcs(target, z, options)
        if abs(dv) < 1e-14:
            raise DerivativeVanishes(f"|derivative| = {abs(dv):.3g} at iterate {z!r}")
        step = fv / dv
        z = z - step
        if abs(step) <= tol:
            closed = _nearest_mod_lattice(z, _closed_form_set(target))
            return RootResult(
                target=target, closed_form=closed, refined=z, iterations=it, converged=True
            )
    raise NoConvergence(f"no convergence within {max_iter} iterations", last_iterate=z)


# ---------------------------------------------------------------------------
# Eisenstein cubic sum: over nonzero kappa in the unit hexagonal lattice,
# sum 1/((1-2 kappa) kappa^2) = 2 pi/sqrt(3) - 4. The summand expands as
# -sum_j 2^{-(j+1)} kappa^{-(3+j)}; complete-shell sums of kappa^{-p} vanish
# unless p = 0 (mod 6), so the first surviving tail power is kappa^{-6} and
# the truncation error decays like radius^{-4}.
# ---------------------------------------------------------------------------


def eisenstein_cubic_sum(radius: float) -> SumResult:
    if radius < 2:
        raise ValueError("radius must be >= 2")
    pts = lattice.shell_points(lattice.HexLattice(1.0), radius)
    partial = kernels.inverse_cubic_sum(pts)
    tgt = complex(2.0 * math.pi / _SQRT3 - 4.0, 0.0)
    return SumResult(
        radius=radius,
        partial_sum=partial,
        target=tgt,
        abs_error=abs(partial - tgt),
    )


def eisenstein_cubic_shell_partials(radius: float) -> list[tuple[float, int, complex, complex]]:
    """Per-shell view: (modulus, count, shell_sum, running_total) per shell."""
    if radius < 2:
        raise ValueError("radius must be >= 2")
    rows = []
    running = 0j
    for q, members in lattice.shell_groups(radius):
        pts = np.array([lattice.to_complex(p, 1.0) for p in members], dtype=np.complex128)
        shell_sum = kernels.inverse_cubic_sum(pts)
        running += shell_sum
        rows.append((math.sqrt(q), len(members), shell_sum, running))
    return rows


def third_period_integral_error(tol: float) -> tuple[float, float]:
    """Integral of 1/sqrt(4x^3 - 1) over (1, inf) with its error estimate.

    Substituting x = 1/t^2 maps the range to (0, 1] and the integrand to
    2/sqrt(4 - t^6), smooth on the whole interval; the value is w/3.
    """
    if not 1e-12 <= tol <= 1e-6:
        raise ValueError("tol must lie in [1e-12, 1e-6]")
    return quadrature.integrate(lambda t: 2.0 / math.sqrt(4.0 - t**6), 0.0, 1.0, tol)


def third_period_integral(tol: float) -> float:
    return third_period_integral_error(tol)[0]


def half_argument_candidates(
    z: complex, options: EvalOptions | None = None
) -> list[complex]:
    """The 8 values p(z) + (+-A) + (+-B) + (+-C) containing p(z/2).

    A, B, C are the square roots of the pairwise products (p - e_i)(p - e_j)
    taken on principal branches; enumeration over all 2^3 sign choices
    sidesteps any branch convention. Sign tuples are enumerated in the fixed
    order (+++), (++-), (+-+), (+--), (-++), (-+-), (--+), (---).
    """
    opts = options or wfun.default_options()
    c = get_constants()
    lat = lattice.HexLattice(scale=c.varpi)
    if lattice.dist_to_lattice(z / 2.0, lat) < opts.margin():
        raise PoleProximity("z/2 is pole-adjacent; half-argument values undefined")
    pv = wfun.p(z, options)
    a = cmath.sqrt((pv - c.e1) * (pv - c.e2))
    b = cmath.sqrt((pv - c.e2) * (pv - c.e3))
    d = cmath.sqrt((pv - c.e3) * (pv - c.e1))
    out = []
    for sa in (1.0, -1.0):
        for sb in (1.0, -1.0):
            for sc in (1.0, -1.0):
                out.append(pv + sa * a + sb * b + sc * d)
    return out


def half_period_shifts() -> list[complex]:
    """The four half-period shifts {0, w/2, e^{i pi/3} w/2, (1+e^{i pi/3}) w/2}."""
    w = get_constants().varpi
    u = cmath.exp(1j * math.pi / 3.0)
    return [0j, complex(w / 2.0, 0.0), u * w / 2.0, (1.0 + u) * w / 2.0]
