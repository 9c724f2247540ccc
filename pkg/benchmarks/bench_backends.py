"""Timing comparison of the compiled kernels against the pure-Python ones.

Usage: python3 benchmarks/bench_backends.py [--points 20000] [--radius 50]

Exercises the scalar evaluation pipeline (p/p' pair, sigma, zeta), the
direct lattice-sum oracles, and the inverse-cubic shell sum on identical
inputs, and prints per-call timings with the speedup factor.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from hexwp import lattice, wfun
from hexwp import _kernels_py as kpy
from hexwp.constants import get_constants

try:
    from hexwp import _kernels_c as kc
except ImportError:
    kc = None


def _sample_points(n: int) -> list[complex]:
    c = get_constants()
    lat = lattice.HexLattice(scale=c.varpi)
    rng = np.random.default_rng(987654321)
    pts = []
    while len(pts) < n:
        s, t = rng.random(), rng.random()
        z = lattice.cell_point(lattice.CellCoords(s, t), lat)
        if lattice.dist_to_lattice(z, lat) >= 0.05 * c.varpi:
            pts.append(z)
    return pts


def _time(fn, reps: int = 1) -> float:
    best = float("inf")
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--points", type=int, default=20000)
    parser.add_argument("--radius", type=float, default=50.0)
    args = parser.parse_args()

    c = get_constants()
    opts = wfun.default_options()
    pcoef, dcoef, zcoef, ecoef = wfun._series_arrays(opts.series_order)
    pts = _sample_points(args.points)
    oracle_pts = _sample_points(50)
    shell = lattice.shell_points(lattice.HexLattice(scale=c.varpi), args.radius)
    unit_shell = lattice.shell_points(lattice.HexLattice(1.0), 40.0)

    def scalar_case(mod):
        def run():
            for z in pts:
                mod.wp_pair(z, c.varpi, pcoef, dcoef, opts.halving_threshold)
                mod.sigma_value(z, c.varpi, c.eta1, c.eta2, ecoef)
                mod.zeta_value(z, c.varpi, c.eta1, c.eta2, zcoef)

        return run

    def oracle_case(mod):
        def run():
            for z in oracle_pts:
                mod.p_oracle_sum(z, shell)
                mod.dp_oracle_sum(z, shell)
                mod.zeta_oracle_sum(z, shell)
                mod.sigma_oracle_prod(z, shell)

        return run

    def cubic_case(mod):
        def run():
            for _ in range(200):
                mod.inverse_cubic_sum(unit_shell)

        return run

    cases = [
        (f"scalar p/p'/sigma/zeta x {args.points}", scalar_case),
        (f"lattice-sum oracles, radius {args.radius:g}, 50 pts", oracle_case),
        ("inverse cubic shell sum, radius 40, x 200", cubic_case),
    ]

    if kc is None:
        print("compiled backend not built; timing pure Python only")
    print(f"{'case':<44} {'python':>11} {'compiled':>11} {'speedup':>8}")
    for label, case in cases:
        t_py = _time(case(kpy), reps=2)
        if kc is not None:
            t_c = _time(case(kc), reps=2)
            print(f"{label:<44} {t_py * 1e3:>9.2f}ms {t_c * 1e3:>9.2f}ms {t_py / t_c:>7.1f}x")
        else:
            print(f"{label:<44} {t_py * 1e3:>9.2f}ms {'-':>11} {'-':>8}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
