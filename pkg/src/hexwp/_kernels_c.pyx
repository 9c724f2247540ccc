# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel backend.

Same signatures and algorithms as _kernels_py (the pure-Python reference);
see that module for the algorithm notes. Scalar pipelines run as straight C
loops; lattice sums reduce sequentially over the caller-provided point
array, which keeps each backend run-to-run deterministic.
"""

from libc.math cimport floor, sqrt, INFINITY

cdef extern from "complex.h":
    double cabs(double complex) nogil
    double complex cexp(double complex) nogil

cdef double _SQRT3 = sqrt(3.0)
cdef double _HALF_SQRT3 = _SQRT3 / 2.0

BACKEND_NAME = "compiled"


cdef inline void _nearest(double zr, double zi, double varpi, long* om, long* on) nogil:
    cdef double t = zi * 2.0 / (_SQRT3 * varpi)
    cdef double s = zr / varpi - 0.5 * t
    cdef long m0 = <long>floor(s)
    cdef long n0 = <long>floor(t)
    cdef double best = INFINITY
    cdef double dr, di, d
    cdef long m, n, dm, dn
    om[0] = m0
    on[0] = n0
    for dm in range(2):
        for dn in range(2):
            m = m0 + dm
            n = n0 + dn
            dr = zr - (m + 0.5 * n) * varpi
            di = zi - n * _HALF_SQRT3 * varpi
            d = dr * dr + di * di
            if d < best:
                best = d
                om[0] = m
                on[0] = n


cdef inline double complex _horner(double[::1] coef, double complex w) nogil:
    cdef double complex acc = 0.0
    cdef Py_ssize_t i
    for i in range(coef.shape[0] - 1, -1, -1):
        acc = acc * w + coef[i]
    return acc


def wp_pair(double complex z, double varpi, double[::1] pcoef, double[::1] dcoef,
            double threshold):
    """(p(z), p'(z)) via reduction, halving, Laurent series and duplication."""
    cdef long m, n
    _nearest(z.real, z.imag, varpi, &m, &n)
    cdef double complex z0 = z - ((m + 0.5 * n) * varpi + 1j * (n * _HALF_SQRT3 * varpi))
    cdef int h = 0
    cdef double az = cabs(z0)
    while az > threshold and h < 8:
        az *= 0.5
        h += 1
    cdef double complex u = z0 / (2.0 ** h)
    cdef double complex w = u * u
    cdef double complex p = 1.0 / w + _horner(pcoef, w)
    cdef double complex dp = -2.0 / (w * u) + u * _horner(dcoef, w)
    cdef double complex w3, den, pn
    cdef int i
    for i in range(h):
        w3 = p * p * p
        den = 4.0 * w3 - 1.0
        pn = p * (w3 + 2.0) / den
        dp = (4.0 * w3 * w3 - 20.0 * w3 - 2.0) / (den * den) * dp * 0.5
        p = pn
    return p, dp


def sigma_value(double complex z, double varpi, double eta1, double complex eta2,
                double[::1] ecoef):
    """sigma(z) via quasi-periodic reduction and the exponential series."""
    cdef long m, n
    _nearest(z.real, z.imag, varpi, &m, &n)
    cdef double complex om = (m + 0.5 * n) * varpi + 1j * (n * _HALF_SQRT3 * varpi)
    cdef double complex z0 = z - om
    cdef double complex base = z0 * cexp(-_horner(ecoef, z0 * z0))
    if m == 0 and n == 0:
        return base
    cdef double complex eta_w = m * eta1 + n * eta2
    cdef double complex arg = eta_w * (z0 + 0.5 * om)
    if arg.real > 700.0:
        raise OverflowError("sigma translation prefactor exceeds double range")
    cdef double eps = -1.0 if (m + n + m * n) % 2 else 1.0
    return eps * cexp(arg) * base


def zeta_value(double complex z, double varpi, double eta1, double complex eta2,
               double[::1] zcoef):
    """zeta(z) = 1/z0 - z0*Z(z0^2) + m*eta1 + n*eta2 after lattice reduction."""
    cdef long m, n
    _nearest(z.real, z.imag, varpi, &m, &n)
    cdef double complex z0 = z - ((m + 0.5 * n) * varpi + 1j * (n * _HALF_SQRT3 * varpi))
    return 1.0 / z0 - z0 * _horner(zcoef, z0 * z0) + m * eta1 + n * eta2


def p_oracle_sum(double complex z, double complex[::1] pts):
    cdef double complex acc = 1.0 / (z * z)
    cdef double complex d, w
    cdef Py_ssize_t i
    for i in range(pts.shape[0]):
        w = pts[i]
        d = z - w
        acc += 1.0 / (d * d) - 1.0 / (w * w)
    return acc


def dp_oracle_sum(double complex z, double complex[::1] pts):
    cdef double complex acc = -2.0 / (z * z * z)
    cdef double complex d
    cdef Py_ssize_t i
    for i in range(pts.shape[0]):
        d = z - pts[i]
        acc += -2.0 / (d * d * d)
    return acc


def zeta_oracle_sum(double complex z, double complex[::1] pts):
    cdef double complex acc = 1.0 / z
    cdef double complex w
    cdef Py_ssize_t i
    for i in range(pts.shape[0]):
        w = pts[i]
        acc += 1.0 / (z - w) + 1.0 / w + z / (w * w)
    return acc


def sigma_oracle_prod(double complex z, double complex[::1] pts):
    cdef double complex prod = 1.0
    cdef double complex expo = 0.0
    cdef double complex q
    cdef Py_ssize_t i
    for i in range(pts.shape[0]):
        q = z / pts[i]
        prod *= 1.0 - q
        expo += q + 0.5 * q * q
    return z * prod * cexp(expo)


def inverse_cubic_sum(double complex[::1] pts):
    """Sum of 1/((1-2k)k^2) over the provided nonzero Eisenstein points k."""
    cdef double complex acc = 0.0
    cdef double complex k
    cdef Py_ssize_t i
    for i in range(pts.shape[0]):
        k = pts[i]
        acc += 1.0 / ((1.0 - 2.0 * k) * k * k)
    return acc
