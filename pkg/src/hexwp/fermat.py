"""Uniformization of the Fermat cubic X^3 + Y^3 = 1.

f(z) = (p'(z) + sqrt(3)) / (2 sqrt(3) p(z)) parametrizes the curve through
(X, Y) = (f(z), f(-z)); the Baker transform pair (2 sqrt(3) p/(p'+sqrt(3)),
(p'-sqrt(3))/(p'+sqrt(3))) is a second solution family. The poles of f are
the lattice points together with the zeros of p; the points where f hits a
cube root of unity are triple, which shows up here as f' vanishing there.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import wfun
from .errors import NearPoleOfF, NearZeroDenominator
from .wfun import EvalOptions

_SQRT3 = math.sqrt(3.0)
_DENOM_FLOOR = 1e-8


@dataclass(frozen=True)
class CurvePoint:
    """A point (x, y) intended to satisfy x^3 + y^3 = 1 up to evaluation error."""

    x: complex
    y: complex

    def residual(self) -> float:
        return abs(self.x**3 + self.y**3 - 1.0)


def f(z: complex, options: EvalOptions | None = None) -> complex:
    """(p'(z) + sqrt(3)) / (2 sqrt(3) p(z))."""
    pv, dv = wfun.p_pair(z, options)
    if abs(pv) < _DENOM_FLOOR:
        raise NearPoleOfF(f"|p(z)| = {abs(pv):.3g} at z={z!r}: pole of f")
    return (dv + _SQRT3) / (2.0 * _SQRT3 * pv)


def f_prime(z: complex, options: EvalOptions | None = None) -> complex:
    """Analytic derivative of f via p'' = 6 p^2.

    f' = [p''*p - p'*(p' + sqrt(3))] / (2 sqrt(3) p^2); finite differences
    are used only as a test oracle, never here.
    """
    pv, dv = wfun.p_pair(z, options)
    if abs(pv) < _DENOM_FLOOR:
        raise NearPoleOfF(f"|p(z)| = {abs(pv):.3g} at z={z!r}: pole of f")
    ddv = 6.0 * pv * pv
    return (ddv * pv - dv * (dv + _SQRT3)) / (2.0 * _SQRT3 * pv * pv)


def uniformize(z: complex, options: EvalOptions | None = None) -> CurvePoint:
    """(f(z), f(-z)): a point of the Fermat cubic."""
    return CurvePoint(x=f(z, options), y=f(-z, options))


def baker_pair(z: complex, options: EvalOptions | None = None) -> CurvePoint:
    """The second solution pair (2 sqrt(3) p/(p'+sqrt(3)), (p'-sqrt(3))/(p'+sqrt(3)))."""
    pv, dv = wfun.p_pair(z, options)
    den = dv + _SQRT3
    if abs(den) < _DENOM_FLOOR:
        raise NearZeroDenominator(
            f"|p'(z)+sqrt(3)| = {abs(den):.3g} at z={z!r}: transform undefined"
        )
    return CurvePoint(x=2.0 * _SQRT3 * pv / den, y=(dv - _SQRT3) / den)
