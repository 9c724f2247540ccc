"""Hexagonal lattice geometry.

The lattice is T = {m*w + n*e^{i pi/3}*w} for a positive scale w (the real
period for the function lattice, 1 for the Eisenstein integers). Everything
here is pure integer/float geometry: coordinates, reduction into the
fundamental cell, complete-shell enumeration for truncated sums, distance
to the lattice, and the triangle predicates used by the zero-location
checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

SQRT3 = math.sqrt(3.0)

# Primitive basis direction e^{i pi/3} = 1/2 + i sqrt(3)/2.
_U_RE = 0.5
_U_IM = SQRT3 / 2.0


class EisensteinPair(NamedTuple):
    """Integer coordinates (m, n) of the lattice point m + n*e^{i pi/3} (unit scale)."""

    m: int
    n: int


class CellCoords(NamedTuple):
    """Fractional coordinates (s, t) in [0,1)^2 over the basis (w, e^{i pi/3} w)."""

    s: float
    t: float


@dataclass(frozen=True)
class HexLattice:
    """Hexagonal lattice with a positive scale (lattice = scale * Eisenstein integers)."""

    scale: float = 1.0

    def __post_init__(self) -> None:
        if not self.scale > 0:
            raise ValueError("scale must be positive")


def to_complex(p: EisensteinPair, scale: float = 1.0) -> complex:
    """Complex value of the lattice point: scale*[(m + n/2) + i*n*sqrt(3)/2]."""
    m, n = p
    return complex(scale * (m + 0.5 * n), scale * (n * _U_IM))


def rotate60(p: EisensteinPair) -> EisensteinPair:
    """Rotate a lattice point by 60 degrees: (m, n) -> (-n, m+n), exactly."""
    return EisensteinPair(-p.n, p.m + p.n)


def conjugate_pair(p: EisensteinPair) -> EisensteinPair:
    """Complex conjugate of a lattice point: (m, n) -> (m+n, -n), exactly."""
    return EisensteinPair(p.m + p.n, -p.n)


def norm_sq(p: EisensteinPair) -> int:
    """Exact squared modulus m^2 + mn + n^2 of a unit-scale lattice point."""
    return p.m * p.m + p.m * p.n + p.n * p.n


def _raw_coords(z: complex, scale: float) -> tuple[float, float]:
    # Invert z = (s + t/2)*scale + i*t*(sqrt(3)/2)*scale.
    t = z.imag * 2.0 / (SQRT3 * scale)
    s = z.real / scale - 0.5 * t
    return s, t


def reduce_to_cell(z: complex, lat: HexLattice) -> tuple[CellCoords, EisensteinPair]:
    """Split z into a cell representative plus a lattice point.

    Returns (CellCoords(s, t), EisensteinPair(m, n)) with s, t in [0, 1) and
    z == (s + t/2 + m + n/2)*scale + i*(t + n)*(sqrt(3)/2)*scale up to
    rounding. Ties at the upper cell boundary (within 1e-14 of 1) wrap to 0
    so the reduction is deterministic.
    """
    s, t = _raw_coords(z, lat.scale)
    m, n = math.floor(s), math.floor(t)
    fs, ft = s - m, t - n
    # Boundary wrap: a fraction indistinguishable from 1 belongs to the next cell.
    if fs >= 1.0 - 1e-14:
        fs = 0.0
        m += 1
    if ft >= 1.0 - 1e-14:
        ft = 0.0
        n += 1
    return CellCoords(fs, ft), EisensteinPair(m, n)


def cell_point(c: CellCoords, lat: HexLattice) -> complex:
    """Complex point of cell coordinates: (s + t/2)*scale + i*t*(sqrt(3)/2)*scale."""
    return complex(lat.scale * (c.s + 0.5 * c.t), lat.scale * (c.t * _U_IM))


def nearest_point(z: complex, lat: HexLattice) -> EisensteinPair:
    """Lattice point closest to z.

    The four corners of the containing cell always include the nearest
    lattice point (the cell splits into two equilateral triangles whose
    circumcenters are interior), so checking those four suffices.
    """
    s, t = _raw_coords(z, lat.scale)
    m0, n0 = math.floor(s), math.floor(t)
    best_d = math.inf
    best = EisensteinPair(m0, n0)
    for dm in (0, 1):
        for dn in (0, 1):
            cand = EisensteinPair(m0 + dm, n0 + dn)
            d = abs(z - to_complex(cand, lat.scale))
            if d < best_d:
                best_d = d
                best = cand
    return best


def dist_to_lattice(z: complex, lat: HexLattice) -> float:
    """min over lattice points w of |z - w|; at most scale/sqrt(3) (covering radius)."""
    return abs(z - to_complex(nearest_point(z, lat), lat.scale))


def shell_groups(radius: float) -> list[tuple[int, list[EisensteinPair]]]:
    """Complete shells of nonzero unit-lattice points with |w| <= radius.

    Returns [(norm_sq, [pairs...]), ...] ordered by increasing modulus; the
    squared modulus m^2+mn+n^2 is an exact integer, so shell membership has
    no floating fuzz. Within a shell, points are ordered by angle, which
    keeps enumeration deterministic. Each shell is closed under 60-degree
    rotation and conjugation; summation clients must consume whole shells
    (partial shells destroy the cancellation that makes the truncated sums
    converge at the documented rate).
    """
    if radius <= 0:
        return []
    r2 = radius * radius
    span = int(math.ceil(2.0 * radius / SQRT3)) + 1
    by_q: dict[int, list[tuple[float, EisensteinPair]]] = {}
    for m in range(-span, span + 1):
        for n in range(-span, span + 1):
            q = m * m + m * n + n * n
            if q == 0 or q > r2:
                continue
            ang = math.atan2(n * _U_IM, m + 0.5 * n)
            by_q.setdefault(q, []).append((ang, EisensteinPair(m, n)))
    out = []
    for q in sorted(by_q):
        members = [p for _, p in sorted(by_q[q])]
        out.append((q, members))
    return out


def shells(lat: HexLattice, radius: float) -> list[EisensteinPair]:
    """Flat shell enumeration (see shell_groups); |point| <= radius*scale."""
    flat: list[EisensteinPair] = []
    for _, members in shell_groups(radius):
        flat.extend(members)
    return flat


def shell_points(lat: HexLattice, radius: float) -> np.ndarray:
    """Complex array of shells(lat, radius) in enumeration order."""
    pairs = shells(lat, radius)
    out = np.empty(len(pairs), dtype=np.complex128)
    for i, p in enumerate(pairs):
        out[i] = to_complex(p, lat.scale)
    return out


def union_translates_equals_scaled(radius: float) -> bool:
    """Whether T, T+rw, T-rw together equal r*T within |.| <= radius*w.

    r = 1/2 + i/(2 sqrt(3)) = (1 + e^{i pi/3})/3, so multiplying a lattice
    point by 3r gives 3r*(m + n u) = (m - n) + (m + 2n) u with u = e^{i pi/3}.
    Scaling everything by 3 therefore turns both sides into integer
    coordinate sets over the basis {1, u}, and the comparison is exact:
    no floating-point set membership.
    """
    if radius <= 0:
        return True
    bound = (3.0 * radius) ** 2  # integer norm form a^2+ab+b^2 <= (3*radius)^2

    def within(a: int, b: int) -> bool:
        return a * a + a * b + b * b <= bound

    span = int(math.ceil(2.0 * radius)) * 3 + 6
    lhs: set[tuple[int, int]] = set()
    rhs: set[tuple[int, int]] = set()
    for m in range(-span, span + 1):
        for n in range(-span, span + 1):
            # 3*(T + delta*r*w): coordinates (3m+delta, 3n+delta).
            for delta in (-1, 0, 1):
                a, b = 3 * m + delta, 3 * n + delta
                if within(a, b):
                    lhs.add((a, b))
            # 3*r*T: coordinates (m-n, m+2n).
            a, b = m - n, m + 2 * n
            if within(a, b):
                rhs.add((a, b))
    return lhs == rhs


def triangle_vertices(which: int, lat: HexLattice) -> tuple[complex, complex, complex]:
    """Vertices of the two equilateral halves of the fundamental cell.

    which=1: (0, w, e^{i pi/3} w); which=2: (w, e^{i pi/3} w, (1+e^{i pi/3}) w),
    the last vertex being sqrt(3) e^{i pi/6} w.
    """
    w = lat.scale
    u = complex(_U_RE * w, _U_IM * w)
    if which == 1:
        return (0j, complex(w, 0.0), u)
    if which == 2:
        return (complex(w, 0.0), u, complex(w, 0.0) + u)
    raise ValueError("which must be 1 or 2")


def point_in_triangle(z: complex, tri: tuple[complex, complex, complex]) -> bool:
    """Strict interior test via the sign of the three edge cross products."""
    a, b, c = tri

    def cross(p: complex, q: complex, x: complex) -> float:
        return (q.real - p.real) * (x.imag - p.imag) - (q.imag - p.imag) * (x.real - p.real)

    d1 = cross(a, b, z)
    d2 = cross(b, c, z)
    d3 = cross(c, a, z)
    return (d1 > 0 and d2 > 0 and d3 > 0) or (d1 < 0 and d2 < 0 and d3 < 0)
