"""Residual-based verification of the function-theoretic identities.

Every identity is a named check: sample points in the fundamental cell
(rejecting pole-adjacent draws and check-specific singular sets), form the
relative residual |LHS - RHS|/(1 + |LHS| + |RHS|), and report the maxima.
Suites bundle checks into a deterministic, machine-readable report.

Checks backed by truncated lattice sums or quadrature carry pinned internal
gates chosen from their known convergence rates instead of the caller
tolerance, which they cannot meet at any finite truncation; the reported
residuals are always the measured ones.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass

import numpy as np

from . import analysis, fermat, lattice, wfun
from .analysis import RootTarget
from .constants import (
    GAMMA_THIRD,
    GAMMA_TWO_THIRDS,
    get_constants,
    varpi_from_first_form,
    varpi_from_gamma,
    varpi_quadrature_error,
)
from .errors import NonConvergence, UnknownSuite
from .wfun import EvalOptions

GENERATOR = "numpy-PCG64"

_SQRT3 = math.sqrt(3.0)
_ROT = cmath.exp(1j * math.pi / 3.0)
_EXCLUSION_FRAC = 0.02  # of varpi, around check-specific singular sets
_OVERSAMPLE_CAP = 10


@dataclass(frozen=True)
class CheckResult:
    name: str
    samples: int
    max_abs_residual: float
    max_rel_residual: float
    worst_point: complex
    passed: bool


@dataclass(frozen=True)
class CheckReport:
    suite: str
    seed: int
    tolerance: float
    generator: str
    checks: tuple[CheckResult, ...]
    passed: bool


def _rel(lhs: complex, rhs: complex) -> float:
    return abs(lhs - rhs) / (1.0 + abs(lhs) + abs(rhs))


def sample_cell(rng, n, opts, exclude=(), predicate=None):
    """Draw n cell points, uniform in cell coordinates.

    Rejects draws within the pole margin of the period lattice, within
    0.02*varpi (mod lattice) of each excluded point, and failing the extra
    predicate if one is given; resamples up to a 10x oversampling cap.
    """
    c = get_constants()
    lat = lattice.HexLattice(scale=c.varpi)
    margin = opts.margin()
    excl = _EXCLUSION_FRAC * c.varpi
    out: list[complex] = []
    drawn = 0
    while len(out) < n:
        if drawn >= _OVERSAMPLE_CAP * n:
            raise NonConvergence(
                f"cell sampler rejected too many points ({drawn} draws for {n} accepts)"
            )
        batch = min(max(2 * (n - len(out)), 64), _OVERSAMPLE_CAP * n - drawn)
        ss = rng.random(batch)
        ts = rng.random(batch)
        drawn += batch
        for s, t in zip(ss, ts):
            z = lattice.cell_point(lattice.CellCoords(s, t), lat)
            if lattice.dist_to_lattice(z, lat) < margin:
                continue
            if any(lattice.dist_to_lattice(z - q, lat) < excl for q in exclude):
                continue
            if predicate is not None and not predicate(z):
                continue
            out.append(z)
            if len(out) == n:
                break
    return out


class _Collector:
    """Accumulates (point, abs, rel) triples and tracks the worst one."""

    def __init__(self):
        self.count = 0
        self.max_abs = 0.0
        self.max_rel = 0.0
        self.worst = 0j

    def add(self, point: complex, abs_res: float, rel_res: float) -> None:
        self.count += 1
        if abs_res > self.max_abs:
            self.max_abs = abs_res
        if rel_res >= self.max_rel:
            self.max_rel = rel_res
            self.worst = point

    def result(self, name: str, samples: int, tol: float, extra_ok: bool = True) -> CheckResult:
        return CheckResult(
            name=name,
            samples=samples,
            max_abs_residual=self.max_abs,
            max_rel_residual=self.max_rel,
            worst_point=self.worst,
            passed=extra_ok and self.max_rel <= tol,
        )


# ---------------------------------------------------------------------------
# core suite
# ---------------------------------------------------------------------------


def _check_ode_cubic(rng, n, tol, opts):
    col = _Collector()
    for z in sample_cell(rng, n, opts):
        pv, dv = wfun.p_pair(z, opts)
        lhs = dv * dv
        rhs = 4.0 * pv**3 - 1.0
        col.add(z, abs(lhs - rhs), _rel(lhs, rhs))
    return col.result("ode_cubic", n, tol)


def _check_scaling_family(rng, n, tol, opts):
    # q_k(z) := k^2 p(kz) satisfies q_k'^2 = 4 q_k^3 - k^6 for every k != 0
    ks = (2.0 + 0j, 0.5 + 0j, _ROT, 1.0 + 1.0j)
    lat = wfun._period_lattice()
    margin = opts.margin()

    def safe(z):
        return all(lattice.dist_to_lattice(k * z, lat) >= margin for k in ks)

    col = _Collector()
    for z in sample_cell(rng, n, opts, predicate=safe):
        for k in ks:
            pv, dv = wfun.p_pair(k * z, opts)
            q = k * k * pv
            qp = k**3 * dv
            lhs = qp * qp
            rhs = 4.0 * q**3 - k**6
            col.add(z, abs(lhs - rhs), _rel(lhs, rhs))
    return col.result("scaling_family", n, tol)


def _check_rotation_covariance(rng, n, tol, opts):
    # p picks up e^{-2 pi i/3}, p' flips sign, sigma picks up e^{i pi/3},
    # zeta picks up e^{-i pi/3} under z -> e^{i pi/3} z
    col = _Collector()
    for z in sample_cell(rng, n, opts):
        zr = _ROT * z
        pv, dv = wfun.p_pair(z, opts)
        pr, dr = wfun.p_pair(zr, opts)
        col.add(z, abs(pr - pv / (_ROT * _ROT)), _rel(pr, pv / (_ROT * _ROT)))
        col.add(z, abs(dr + dv), _rel(dr, -dv))
        sv = wfun.sigma(z, opts)
        sr = wfun.sigma(zr, opts)
        col.add(z, abs(sr - _ROT * sv), _rel(sr, _ROT * sv))
        zv = wfun.zeta(z, opts)
        zrv = wfun.zeta(zr, opts)
        col.add(z, abs(zrv - zv / _ROT), _rel(zrv, zv / _ROT))
    return col.result("rotation_covariance", n, tol)


def _check_parity(rng, n, tol, opts):
    col = _Collector()
    for z in sample_cell(rng, n, opts):
        pv, dv = wfun.p_pair(z, opts)
        pm, dm = wfun.p_pair(-z, opts)
        col.add(z, abs(pm - pv), _rel(pm, pv))
        col.add(z, abs(dm + dv), _rel(dm, -dv))
        sv, sm = wfun.sigma(z, opts), wfun.sigma(-z, opts)
        col.add(z, abs(sm + sv), _rel(sm, -sv))
        zv, zm = wfun.zeta(z, opts), wfun.zeta(-z, opts)
        col.add(z, abs(zm + zv), _rel(zm, -zv))
    return col.result("parity", n, tol)


def _check_conjugation(rng, n, tol, opts):
    col = _Collector()
    for z in sample_cell(rng, n, opts):
        zc = z.conjugate()
        pv, dv = wfun.p_pair(z, opts)
        pc, dc = wfun.p_pair(zc, opts)
        col.add(z, abs(pc - pv.conjugate()), _rel(pc, pv.conjugate()))
        col.add(z, abs(dc - dv.conjugate()), _rel(dc, dv.conjugate()))
        col.add(z, abs(wfun.sigma(zc, opts) - wfun.sigma(z, opts).conjugate()),
                _rel(wfun.sigma(zc, opts), wfun.sigma(z, opts).conjugate()))
        col.add(z, abs(wfun.zeta(zc, opts) - wfun.zeta(z, opts).conjugate()),
                _rel(wfun.zeta(zc, opts), wfun.zeta(z, opts).conjugate()))
    return col.result("conjugation", n, tol)


def _check_periodicity(rng, n, tol, opts):
    c = get_constants()
    periods = (complex(c.varpi, 0.0), _ROT * c.varpi)
    etas = (c.eta1, c.eta2)
    col = _Collector()
    for z in sample_cell(rng, n, opts):
        pv, dv = wfun.p_pair(z, opts)
        zv = wfun.zeta(z, opts)
        for w, eta_w in zip(periods, etas):
            pw, dw = wfun.p_pair(z + w, opts)
            col.add(z, abs(pw - pv), _rel(pw, pv))
            col.add(z, abs(dw - dv), _rel(dw, dv))
            inc = wfun.zeta(z + w, opts) - zv
            col.add(z, abs(inc - eta_w), _rel(inc, eta_w))
    return col.result("periodicity", n, tol)


def _check_curvature_identity(rng, n, tol, opts):
    # p'' = 6 p^2, with p'' from a central difference of p' so the check is
    # independent of the evaluator's own second-derivative shortcut
    h = 1e-6
    lat = wfun._period_lattice()
    pad = opts.margin() * 1.01

    col = _Collector()
    for z in sample_cell(rng, n, opts, predicate=lambda z: lattice.dist_to_lattice(z, lat) >= pad):
        pv = wfun.p(z, opts)
        _, d_plus = wfun.p_pair(z + h, opts)
        _, d_minus = wfun.p_pair(z - h, opts)
        fd = (d_plus - d_minus) / (2.0 * h)
        rhs = 6.0 * pv * pv
        col.add(z, abs(fd - rhs), _rel(fd, rhs))
    return col.result("curvature_identity", n, tol)


def _check_legendre_relation(rng, n, tol, opts):
    c = get_constants()
    z1 = complex(c.varpi / 2.0, 0.0)
    z2 = _ROT * c.varpi / 2.0
    eta1 = 2.0 * wfun.zeta(z1, opts)
    eta2 = 2.0 * wfun.zeta(z2, opts)
    r_legendre = abs(eta1 * _ROT * c.varpi - eta2 * c.varpi - 2j * math.pi)
    r_ratio = abs(eta2 / eta1 - cmath.exp(-1j * math.pi / 3.0))
    r_product = abs(eta1 * c.varpi - 2.0 * math.pi / _SQRT3)
    col = _Collector()
    col.add(z1, r_legendre, r_legendre)
    col.add(z2, r_ratio, r_ratio)
    col.add(z1, r_product, r_product)
    return col.result("legendre_relation", 2, tol)


def _check_real_axis_shape(rng, n, tol, opts):
    # On (0, w): p is real with minimum e1 at w/2 (decreasing before,
    # increasing after), p' changes sign at w/2, zeta is real and strictly
    # decreasing, sigma is real and positive.
    c = get_constants()
    m = 200
    margin = opts.margin()
    xs = np.linspace(margin, c.varpi - margin, m)
    half = c.varpi / 2.0
    spacing = xs[1] - xs[0]

    col = _Collector()
    shape_ok = True
    prev_p = None
    prev_zeta = None
    for x in xs:
        z = complex(x, 0.0)
        pv, dv = wfun.p_pair(z, opts)
        zv = wfun.zeta(z, opts)
        sv = wfun.sigma(z, opts)
        for v in (pv, dv, zv, sv):
            col.add(z, abs(v.imag), abs(v.imag) / (1.0 + abs(v)))
        if pv.real < c.e1.real - 1e-12:
            shape_ok = False
        if x < half - spacing and dv.real >= 0.0:
            shape_ok = False
        if x > half + spacing and dv.real <= 0.0:
            shape_ok = False
        if sv.real <= 0.0:
            shape_ok = False
        if prev_p is not None:
            px, pp = prev_p
            if x <= half and px <= half and pv.real >= pp:
                shape_ok = False
            if x >= half and px >= half and pv.real <= pp:
                shape_ok = False
        if prev_zeta is not None and zv.real >= prev_zeta:
            shape_ok = False
        prev_p = (x, pv.real)
        prev_zeta = zv.real
    return col.result("real_axis_shape", m, tol, extra_ok=shape_ok)


# ---------------------------------------------------------------------------
# identities suite (sigma function laws and the half-argument formula)
# ---------------------------------------------------------------------------


def _check_sigma_real_period_law(rng, n, tol, opts):
    c = get_constants()
    e_factor = -math.exp(math.pi / _SQRT3)
    col = _Collector()
    for z in sample_cell(rng, n, opts):
        lhs = wfun.sigma(z + c.varpi, opts)
        rhs = e_factor * cmath.exp(c.eta1 * z) * wfun.sigma(z, opts)
        col.add(z, abs(lhs - rhs), _rel(lhs, rhs))
    return col.result("sigma_real_period_law", n, tol)


def _check_sigma_rotated_period_law(rng, n, tol, opts):
    c = get_constants()
    e_factor = -math.exp(math.pi / _SQRT3)
    col = _Collector()
    for z in sample_cell(rng, n, opts):
        lhs = wfun.sigma(z + _ROT * c.varpi, opts)
        rhs = e_factor * cmath.exp(c.eta2 * z) * wfun.sigma(z, opts)
        col.add(z, abs(lhs - rhs), _rel(lhs, rhs))
    return col.result("sigma_rotated_period_law", n, tol)


def _check_sigma_zero_quotient(rng, n, tol, opts):
    c = get_constants()
    rw = c.r * c.varpi
    s_rw2 = wfun.sigma(rw, opts) ** 2
    col = _Collector()
    for z in sample_cell(rng, n, opts):
        lhs = wfun.p(z, opts)
        rhs = -(wfun.sigma(z - rw, opts) * wfun.sigma(z + rw, opts)) / (
            s_rw2 * wfun.sigma(z, opts) ** 2
        )
        col.add(z, abs(lhs - rhs), _rel(lhs, rhs))
    return col.result("sigma_zero_quotient", n, tol)


def _check_sigma_lattice_rescaling(rng, n, tol, opts):
    c = get_constants()
    r_inv = 1.0 / c.r
    col = _Collector()
    for z in sample_cell(rng, n, opts):
        lhs = wfun.p(z, opts)
        rhs = c.r * wfun.sigma(r_inv * z, opts) / wfun.sigma(z, opts) ** 3
        col.add(z, abs(lhs - rhs), _rel(lhs, rhs))
    return col.result("sigma_lattice_rescaling", n, tol)


def _check_dp_sigma_duplication(rng, n, tol, opts):
    col = _Collector()
    for z in sample_cell(rng, n, opts):
        lhs = wfun.p_prime(z, opts)
        rhs = -wfun.sigma(2.0 * z, opts) / wfun.sigma(z, opts) ** 4
        col.add(z, abs(lhs - rhs), _rel(lhs, rhs))
    return col.result("dp_sigma_duplication", n, tol)


def _check_half_argument_membership(rng, n, tol, opts):
    # Each of the four half-argument values p(z/2 + half-period) appears
    # among the eight sign-choice candidates built from p(z).
    lat = wfun._period_lattice()
    margin = opts.margin()
    shifts = analysis.half_period_shifts()

    def safe(z):
        return all(lattice.dist_to_lattice(z / 2.0 + h, lat) >= margin for h in shifts)

    col = _Collector()
    for z in sample_cell(rng, n, opts, predicate=safe):
        cands = analysis.half_argument_candidates(z, opts)
        for h in shifts:
            target = wfun.p(z / 2.0 + h, opts)
            best = min(cands, key=lambda cv: abs(cv - target))
            col.add(z, abs(best - target), _rel(best, target))
    return col.result("half_argument_membership", n, tol)


# ---------------------------------------------------------------------------
# zeros suite
# ---------------------------------------------------------------------------


def _rediscover(col, rng, target, closed_zeros, value_fn, opts):
    """Newton-refine 8 perturbed seeds per closed-form zero; returns bool."""
    c = get_constants()
    ok = True
    for q in closed_zeros:
        angles = rng.random(8) * 2.0 * math.pi
        for th in angles:
            seed_pt = q + 0.05 * c.varpi * cmath.exp(1j * th)
            res = analysis.newton_refine(target, seed_pt, tol=1e-12, max_iter=25, options=opts)
            if not res.converged or res.iterations > 25:
                ok = False
            dist = analysis.dist_mod_lattice(res.refined, q)
            col.add(res.refined, abs(value_fn(res.refined)), dist)
    return ok


def _check_p_zero_rediscovery(rng, n, tol, opts):
    c = get_constants()
    zeros = analysis.zeros_of_p()
    col = _Collector()
    ok = _rediscover(col, rng, RootTarget.P, zeros, lambda z: wfun.p(z, opts), opts)

    # six rotates of r*w form a regular hexagon of zeros with modulus w/sqrt(3)
    rw = zeros[0]
    for ell in range(6):
        zl = rw * cmath.exp(1j * ell * math.pi / 3.0)
        if abs(abs(zl) - c.varpi / _SQRT3) > 1e-12:
            ok = False
        col.add(zl, abs(wfun.p(zl, opts)), abs(wfun.p(zl, opts)))

    # the two cell zeros are the centers of the cell's equilateral halves
    lat = lattice.HexLattice(scale=c.varpi)
    if not lattice.point_in_triangle(zeros[0], lattice.triangle_vertices(1, lat)):
        ok = False
    if not lattice.point_in_triangle(zeros[1], lattice.triangle_vertices(2, lat)):
        ok = False
    return col.result("p_zero_rediscovery", 16, tol, extra_ok=ok)


def _check_dp_offset_zero_rediscovery(rng, n, tol, opts):
    c = get_constants()
    col = _Collector()
    ok = True
    for sign, target in ((1, RootTarget.DP_PLUS_SQRT3), (-1, RootTarget.DP_MINUS_SQRT3)):
        zeros = analysis.zeros_of_dp_shifted(sign)
        shift = sign * _SQRT3
        ok = _rediscover(
            col, rng, target, zeros, lambda z: wfun.p_prime(z, opts) + shift, opts
        ) and ok
    plus = analysis.zeros_of_dp_shifted(1)
    if abs(abs(plus[0] - plus[1]) - c.varpi / _SQRT3) > 1e-12:
        ok = False
    return col.result("dp_offset_zero_rediscovery", 48, tol, extra_ok=ok)


# ---------------------------------------------------------------------------
# sums suite (truncated lattice sums and quadrature; pinned gates)
# ---------------------------------------------------------------------------


def _check_eisenstein_cubic_sum(rng, n, tol, opts):
    # Pinned gates: abs error <= 1e-4 at radius 30, errors nonincreasing
    # over radii {10, 20, 40}, log-log decay slope <= -3 (expected ~ -4),
    # imaginary part below 1e-12.
    radii = (10.0, 20.0, 30.0, 40.0)
    results = {rad: analysis.eisenstein_cubic_sum(rad) for rad in radii}
    col = _Collector()
    for rad in radii:
        res = results[rad]
        col.add(complex(rad, 0.0), res.abs_error, _rel(res.partial_sum, res.target))
    e10, e20, e40 = (results[r].abs_error for r in (10.0, 20.0, 40.0))
    slope = (math.log(e40) - math.log(e10)) / (math.log(40.0) - math.log(10.0))
    ok = (
        results[30.0].abs_error <= 1e-4
        and e10 >= e20 >= e40
        and slope <= -3.0
        and abs(results[30.0].partial_sum.imag) <= 1e-12
    )
    return CheckResult(
        name="eisenstein_cubic_sum",
        samples=len(radii),
        max_abs_residual=col.max_abs,
        max_rel_residual=col.max_rel,
        worst_point=col.worst,
        passed=ok,
    )


def _check_oracle_equivalence(rng, n, tol, opts):
    # Series evaluator vs direct lattice sums at truncation radii 25/50/100.
    # Pinned gates: per-radius max relative deviation <= 5e-3 and
    # nonincreasing as the radius grows.
    m = min(n, 100)
    pts = sample_cell(rng, m, opts)
    radii = (25.0, 50.0, 100.0)
    col = _Collector()
    per_radius = []
    for rad in radii:
        worst = 0.0
        for z in pts:
            pairs = (
                (wfun.p(z, opts), wfun.p_oracle(z, rad, opts)),
                (wfun.p_prime(z, opts), wfun.p_prime_oracle(z, rad, opts)),
                (wfun.zeta(z, opts), wfun.zeta_oracle(z, rad, opts)),
                (wfun.sigma(z, opts), wfun.sigma_oracle(z, rad, opts)),
            )
            for lhs, rhs in pairs:
                r = _rel(lhs, rhs)
                col.add(z, abs(lhs - rhs), r)
                if r > worst:
                    worst = r
        per_radius.append(worst)
    ok = all(w <= 5e-3 for w in per_radius) and per_radius[0] >= per_radius[1] >= per_radius[2]
    return CheckResult(
        name="oracle_equivalence",
        samples=m,
        max_abs_residual=col.max_abs,
        max_rel_residual=col.max_rel,
        worst_point=col.worst,
        passed=ok,
    )


def _check_period_quadrature_agreement(rng, n, tol, opts):
    # Pinned gates: both quadrature routes within 1e-10 of the Gamma closed
    # form; the reflection product Gamma(1/3)Gamma(2/3) within 1e-12 of
    # 2 pi/sqrt(3).
    v_gamma = varpi_from_gamma()
    v_beta, _ = varpi_quadrature_error(1e-12)
    v_first = varpi_from_first_form(1e-12)
    r_beta = abs(v_beta - v_gamma)
    r_first = abs(v_first - v_gamma)
    r_gamma = abs(GAMMA_THIRD * GAMMA_TWO_THIRDS - 2.0 * math.pi / _SQRT3)
    col = _Collector()
    col.add(complex(v_beta, 0.0), r_beta, r_beta / (1.0 + 2.0 * v_gamma))
    col.add(complex(v_first, 0.0), r_first, r_first / (1.0 + 2.0 * v_gamma))
    col.add(complex(GAMMA_THIRD * GAMMA_TWO_THIRDS, 0.0), r_gamma, r_gamma)
    ok = r_beta <= 1e-10 and r_first <= 1e-10 and r_gamma <= 1e-12
    return CheckResult(
        name="period_quadrature_agreement",
        samples=3,
        max_abs_residual=col.max_abs,
        max_rel_residual=col.max_rel,
        worst_point=col.worst,
        passed=ok,
    )


def _check_third_period_integral(rng, n, tol, opts):
    # Pinned gates: integral within 1e-9 of varpi/3 and consistent with
    # one third of the quadrature period within the summed error estimates.
    c = get_constants()
    v, est = analysis.third_period_integral_error(1e-10)
    v_beta, est_beta = varpi_quadrature_error(1e-12)
    r_closed = abs(v - c.varpi / 3.0)
    r_cross = abs(v - v_beta / 3.0)
    col = _Collector()
    col.add(complex(v, 0.0), r_closed, r_closed / (1.0 + 2.0 * c.varpi / 3.0))
    col.add(complex(v, 0.0), r_cross, r_cross / (1.0 + 2.0 * c.varpi / 3.0))
    ok = r_closed <= 1e-9 and r_cross <= est + est_beta / 3.0 + 1e-12
    return CheckResult(
        name="third_period_integral",
        samples=2,
        max_abs_residual=col.max_abs,
        max_rel_residual=col.max_rel,
        worst_point=col.worst,
        passed=ok,
    )


# ---------------------------------------------------------------------------
# uniformization suite
# ---------------------------------------------------------------------------


def _check_fermat_curve(rng, n, tol, opts):
    col = _Collector()
    for z in sample_cell(rng, n, opts, exclude=analysis.zeros_of_p()):
        pt = fermat.uniformize(z, opts)
        lhs = pt.x**3 + pt.y**3
        col.add(z, abs(lhs - 1.0), _rel(lhs, 1.0 + 0j))
    return col.result("fermat_curve", n, tol)


def _check_baker_pair_curve(rng, n, tol, opts):
    col = _Collector()
    for z in sample_cell(rng, n, opts, exclude=analysis.zeros_of_dp_shifted(1)):
        pt = fermat.baker_pair(z, opts)
        lhs = pt.x**3 + pt.y**3
        col.add(z, abs(lhs - 1.0), _rel(lhs, 1.0 + 0j))
    return col.result("baker_pair_curve", n, tol)


def _check_triple_zero(rng, n, tol, opts):
    # f takes the three cube roots of unity at -w/3 and its two rotates by
    # e^{2 pi i/3}, each with vanishing f' (triple-zero structure of f - rho).
    c = get_constants()
    roots = [cmath.exp(2j * math.pi * k / 3.0) for k in range(3)]
    col = _Collector()
    hit: list[complex] = []
    for k in range(3):
        zs = -(c.varpi / 3.0) * cmath.exp(2j * math.pi * k / 3.0)
        fv = fermat.f(zs, opts)
        rho = min(roots, key=lambda t: abs(fv - t))
        hit.append(rho)
        dfv = fermat.f_prime(zs, opts)
        col.add(zs, abs(fv - rho), abs(fv - rho))
        col.add(zs, abs(dfv), abs(dfv) / 10.0)
    distinct = len({min(range(3), key=lambda i: abs(h - roots[i])) for h in hit}) == 3
    return col.result("triple_zero", 3, tol, extra_ok=distinct)


# ---------------------------------------------------------------------------
# registry and suites
# ---------------------------------------------------------------------------

REGISTRY = (
    ("ode_cubic", _check_ode_cubic),
    ("scaling_family", _check_scaling_family),
    ("rotation_covariance", _check_rotation_covariance),
    ("parity", _check_parity),
    ("conjugation", _check_conjugation),
    ("periodicity", _check_periodicity),
    ("curvature_identity", _check_curvature_identity),
    ("legendre_relation", _check_legendre_relation),
    ("real_axis_shape", _check_real_axis_shape),
    ("sigma_real_period_law", _check_sigma_real_period_law),
    ("sigma_rotated_period_law", _check_sigma_rotated_period_law),
    ("sigma_zero_quotient", _check_sigma_zero_quotient),
    ("sigma_lattice_rescaling", _check_sigma_lattice_rescaling),
    ("dp_sigma_duplication", _check_dp_sigma_duplication),
    ("half_argument_membership", _check_half_argument_membership),
    ("p_zero_rediscovery", _check_p_zero_rediscovery),
    ("dp_offset_zero_rediscovery", _check_dp_offset_zero_rediscovery),
    ("eisenstein_cubic_sum", _check_eisenstein_cubic_sum),
    ("oracle_equivalence", _check_oracle_equivalence),
    ("period_quadrature_agreement", _check_period_quadrature_agreement),
    ("third_period_integral", _check_third_period_integral),
    ("fermat_curve", _check_fermat_curve),
    ("baker_pair_curve", _check_baker_pair_curve),
    ("triple_zero", _check_triple_zero),
)

SUITES = {
    "core": (
        "ode_cubic",
        "scaling_family",
        "rotation_covariance",
        "parity",
        "conjugation",
        "periodicity",
        "curvature_identity",
        "legendre_relation",
        "real_axis_shape",
    ),
    "identities": (
        "sigma_real_period_law",
        "sigma_rotated_period_law",
        "sigma_zero_quotient",
        "sigma_lattice_rescaling",
        "dp_sigma_duplication",
        "half_argument_membership",
    ),
    "zeros": ("p_zero_rediscovery", "dp_offset_zero_rediscovery"),
    "sums": (
        "eisenstein_cubic_sum",
        "oracle_equivalence",
        "period_quadrature_agreement",
        "third_period_integral",
    ),
    "uniformization": ("fermat_curve", "baker_pair_curve", "triple_zero"),
}
SUITES["all"] = tuple(name for name, _ in REGISTRY)

_INDEX = {name: i for i, (name, _) in enumerate(REGISTRY)}
_RUNNER = dict(REGISTRY)


def run_suite(
    name: str,
    seed: int,
    tol: float,
    n: int,
    options: EvalOptions | None = None,
) -> CheckReport:
    """Run every check of a suite; deterministic for fixed (name, seed, tol, n).

    Each check draws from its own generator, seeded by the suite seed and the
    check's fixed registry index, so a check's samples do not depend on which
    suite invoked it.
    """
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; expected one of {sorted(SUITES)}")
    if not 0 <= int(seed) < 2**64:
        raise ValueError("seed must be a 64-bit unsigned integer")
    if not tol > 0:
        raise ValueError("tol must be positive")
    if not n >= 1:
        raise ValueError("n must be at least 1")
    opts = options or wfun.default_options()
    results = []
    for check_name in SUITES[name]:
        rng = np.random.default_rng(
            np.random.SeedSequence(entropy=int(seed), spawn_key=(_INDEX[check_name],))
        )
        results.append(_RUNNER[check_name](rng, n, tol, opts))
    return CheckReport(
        suite=name,
        seed=int(seed),
        tolerance=tol,
        generator=GENERATOR,
        checks=tuple(results),
        passed=all(r.passed for r in results),
    )


def report_to_json(report: CheckReport) -> str:
    doc = {
        "suite": report.suite,
        "seed": report.seed,
        "tolerance": report.tolerance,
        "checks": [
            {
                "name": r.name,
                "samples": r.samples,
                "max_abs_residual": r.max_abs_residual,
                "max_rel_residual": r.max_rel_residual,
                "worst_point": {"re": r.worst_point.real, "im": r.worst_point.imag},
                "pass": r.passed,
            }
            for r in report.checks
        ],
        "pass": report.passed,
    }
    return json.dumps(doc, indent=2)
