"""Evaluators for p, p', p'', sigma and zeta on the hexagonal lattice.

Fast path: reduce the argument to the lattice representative nearest 0
(modulus at most varpi/sqrt(3), the covering radius), halve it until it is
inside the Laurent disk, evaluate the series, then push the pair (p, p')
back up through the duplication map. sigma and zeta reduce instead via
their exact quasi-periodic translation laws, which need no halving because
the series already converges on the whole reduced disk.

Slow path: truncated lattice sums/products over complete shells, used as
independent oracles for every fast evaluator. They share no code with the
fast path beyond the shell enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import lattice
from ._backend import BACKEND, kernels
from .constants import get_constants
from .errors import PoleProximity, SigmaOverflow

__all__ = [
    "BACKEND",
    "EvalOptions",
    "LaurentTable",
    "default_options",
    "laurent_table",
    "p",
    "p_pair",
    "p_prime",
    "p_doubleprime",
    "sigma",
    "zeta",
    "p_oracle",
    "p_prime_oracle",
    "zeta_oracle",
    "sigma_oracle",
]


@dataclass(frozen=True)
class LaurentTable:
    """Laurent coefficients of p about 0: p(z) = 1/z^2 + sum c_k z^{2k-2}.

    c is indexed so that c[k] is the coefficient for k = 2..order; with
    g2 = 0 only k divisible by 3 survive (c[3] = 1/28, c[6] = 1/10192, ...).
    """

    order: int
    c: tuple[float, ...]


@lru_cache(maxsize=8)
def laurent_table(order: int = 40) -> LaurentTable:
    """Build the coefficient table by the classical quadratic recursion."""
    if order < 12:
        raise ValueError("series order below 12 cannot reach double precision")
    g2, g3 = 0.0, 1.0
    c = [0.0] * (order + 1)
    c[2] = g2 / 20.0
    c[3] = g3 / 28.0
    for k in range(4, order + 1):
        acc = 0.0
        for m in range(2, k - 1):
            acc += c[m] * c[k - m]
        c[k] = 3.0 * acc / ((2 * k + 1) * (k - 3))
    return LaurentTable(order=order, c=tuple(c))


@lru_cache(maxsize=8)
def _series_arrays(order: int) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Kernel-ready coefficient arrays in ascending powers of w = u^2.

    pcoef: sum c_k w^{k-1} (p minus its pole)
    dcoef: sum (2k-2) c_k w^{k-2} (p' = -2/u^3 + u * dcoef(w))
    zcoef: sum c_k/(2k-1) w^{k-1} (zeta = 1/u - u * zcoef(w))
    ecoef: sum c_k/((2k)(2k-1)) w^k (sigma = u * exp(-ecoef(w)))
    """
    tab = laurent_table(order)
    pcoef = np.zeros(order, dtype=np.float64)
    dcoef = np.zeros(order - 1, dtype=np.float64)
    zcoef = np.zeros(order, dtype=np.float64)
    ecoef = np.zeros(order + 1, dtype=np.float64)
    for k in range(2, order + 1):
        ck = tab.c[k]
        pcoef[k - 1] = ck
        dcoef[k - 2] = (2 * k - 2) * ck
        zcoef[k - 1] = ck / (2 * k - 1)
        ecoef[k] = ck / ((2 * k) * (2 * k - 1))
    return pcoef, dcoef, zcoef, ecoef


@dataclass(frozen=True)
class EvalOptions:
    """Tuning knobs for the evaluators; defaults suit double precision."""

    series_order: int = 40
    halving_threshold: float = 0.45
    pole_margin: float | None = None  # absolute; None means 0.05*varpi
    oracle_radius: float = 50.0  # shell truncation radius, units of varpi

    def __post_init__(self) -> None:
        if self.series_order < 12:
            raise ValueError("series_order must be >= 12")
        if not 0.0 < self.halving_threshold < 1.0:
            raise ValueError("halving_threshold must lie in (0, 1)")
        if self.pole_margin is not None and not self.pole_margin > 0:
            raise ValueError("pole_margin must be positive")
        if not self.oracle_radius > 0:
            raise ValueError("oracle_radius must be positive")

    def margin(self) -> float:
        return 0.05 * get_constants().varpi if self.pole_margin is None else self.pole_margin


@lru_cache(maxsize=1)
def default_options() -> EvalOptions:
    return EvalOptions()


@lru_cache(maxsize=1)
def _period_lattice() -> lattice.HexLattice:
    return lattice.HexLattice(scale=get_constants().varpi)


def _check_margin(z: complex, opts: EvalOptions) -> None:
    if lattice.dist_to_lattice(z, _period_lattice()) < opts.margin():
        raise PoleProximity(f"z={z!r} is within {opts.margin():.6g} of a lattice point")


def p_pair(z: complex, options: EvalOptions | None = None) -> tuple[complex, complex]:
    """(p(z), p'(z)) in one pipeline pass."""
    opts = options or default_options()
    _check_margin(z, opts)
    pcoef, dcoef, _, _ = _series_arrays(opts.series_order)
    return kernels.wp_pair(z, get_constants().varpi, pcoef, dcoef, opts.halving_threshold)


def p(z: complex, options: EvalOptions | None = None) -> complex:
    return p_pair(z, options)[0]


def p_prime(z: complex, options: EvalOptions | None = None) -> complex:
    return p_pair(z, options)[1]


def p_doubleprime(z: complex, options: EvalOptions | None = None) -> complex:
    """p''(z) = 6 p(z)^2 (differentiated cubic with g2 = 0)."""
    val = p(z, options)
    return 6.0 * val * val


def sigma(z: complex, options: EvalOptions | None = None) -> complex:
    """Entire sigma; no pole guard (its lattice zeros are honest zeros)."""
    opts = options or default_options()
    consts = get_constants()
    _, _, _, ecoef = _series_arrays(opts.series_order)
    try:
        return kernels.sigma_value(z, consts.varpi, consts.eta1, consts.eta2, ecoef)
    except OverflowError as exc:
        raise SigmaOverflow(str(exc)) from None


def zeta(z: complex, options: EvalOptions | None = None) -> complex:
    opts = options or default_options()
    _check_margin(z, opts)
    consts = get_constants()
    _, _, zcoef, _ = _series_arrays(opts.series_order)
    return kernels.zeta_value(z, consts.varpi, consts.eta1, consts.eta2, zcoef)


# ---------------------------------------------------------------------------
# Lattice-sum oracles. Complete-shell truncation: under 60-degree rotation
# the shell sums of w^{-p} vanish unless p is a multiple of 6, so the error
# decays like radius^{-4} even though individual tails look like radius^{-1}.
# ---------------------------------------------------------------------------

_MIN_ORACLE_RADIUS = 5.0


@lru_cache(maxsize=16)
def _shell_cache(radius: float) -> np.ndarray:
    return lattice.shell_points(_period_lattice(), radius)


def _oracle_guard(z: complex, radius: float, options: EvalOptions | None) -> EvalOptions:
    opts = options or default_options()
    if radius < _MIN_ORACLE_RADIUS:
        raise ValueError(f"oracle radius must be >= {_MIN_ORACLE_RADIUS}")
    _check_margin(z, opts)
    return opts


def p_oracle(z: complex, radius: float, options: EvalOptions | None = None) -> complex:
    """p by the defining sum 1/z^2 + sum [1/(z-w)^2 - 1/w^2], |w| <= radius*varpi."""
    _oracle_guard(z, radius, options)
    return kernels.p_oracle_sum(z, _shell_cache(radius))


def p_prime_oracle(z: complex, radius: float, options: EvalOptions | None = None) -> complex:
    """p' by the sum -2 sum 1/(z-w)^3 over the truncated lattice including 0."""
    _oracle_guard(z, radius, options)
    return kernels.dp_oracle_sum(z, _shell_cache(radius))


def zeta_oracle(z: complex, radius: float, options: EvalOptions | None = None) -> complex:
    """zeta by 1/z + sum [1/(z-w) + 1/w + z/w^2]."""
    _oracle_guard(z, radius, options)
    return kernels.zeta_oracle_sum(z, _shell_cache(radius))


def sigma_oracle(z: complex, radius: float, options: EvalOptions | None = None) -> complex:
    """sigma by the defining product z * prod (1 - z/w) e^{z/w + (z/w)^2/2}."""
    _oracle_guard(z, radius, options)
    return kernels.sigma_oracle_prod(z, _shell_cache(radius))
