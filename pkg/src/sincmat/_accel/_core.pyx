# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementations of the hot kernels.

Contract-identical to `_fallback`; see that module for the reference semantics.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport exp, fabs, floor, ldexp, log, sin, sqrt

cnp.import_array()

cdef double _SINC_TAYLOR_CUT = 1e-4
cdef double _SCALE_HI = 1e150
cdef double _SCALE_LO = 1e-150
cdef double _LOG_PI = 1.1447298858494001741
cdef double _LN2 = 0.6931471805599453094


cdef inline double _sinc(double z) nogil:
    cdef double z2
    if fabs(z) < _SINC_TAYLOR_CUT:
        z2 = z * z
        return 1.0 - z2 / 6.0 + z2 * z2 / 120.0
    return sin(z) / z


def sinc_scalar(double c, double u):
    """sin(c*u)/(c*u) with the removable singularity handled."""
    return _sinc(c * u)


def sinc_kernel_matrix(double c, xs):
    """N x N matrix sinc(c*(x_i - x_j)), exactly symmetric (upper-triangle fill)."""
    cdef const double[::1] x = np.ascontiguousarray(xs, dtype=np.float64)
    cdef Py_ssize_t n = x.shape[0], i, j
    out_arr = np.empty((n, n), dtype=np.float64)
    cdef double[:, ::1] out = out_arr
    cdef double v
    with nogil:
        for i in range(n):
            out[i, i] = 1.0
            for j in range(i + 1, n):
                v = _sinc(c * (x[i] - x[j]))
                out[i, j] = v
                out[j, i] = v
    return out_arr


def legendre_design(xs, int M):
    """N x M matrix of normalized Legendre values sqrt(n+1/2) P_n(x), n = 0..M-1."""
    cdef const double[::1] x = np.ascontiguousarray(xs, dtype=np.float64)
    cdef Py_ssize_t n_pts = x.shape[0], i
    cdef int k
    out_arr = np.empty((n_pts, M), dtype=np.float64)
    cdef double[:, ::1] out = out_arr
    cdef double p_prev, p_cur, p_next, xi
    with nogil:
        for i in range(n_pts):
            xi = x[i]
            p_prev = 1.0
            out[i, 0] = p_prev * sqrt(0.5)
            if M > 1:
                p_cur = xi
                out[i, 1] = p_cur * sqrt(1.5)
                for k in range(1, M - 1):
                    p_next = ((2 * k + 1) * xi * p_cur - k * p_prev) / (k + 1)
                    out[i, k + 1] = p_next * sqrt(k + 1.5)
                    p_prev = p_cur
                    p_cur = p_next
    return out_arr


def hermite_design(xs, int M, double c):
    """N x M matrix of scaled Hermite values c^(1/4) phi_n(sqrt(c) x), n = 0..M-1.

    Mantissa/exponent ledger recurrence; see the fallback module for rationale.
    """
    cdef const double[::1] x = np.ascontiguousarray(xs, dtype=np.float64)
    cdef Py_ssize_t n_pts = x.shape[0], i
    cdef int n, exi
    out_arr = np.empty((n_pts, M), dtype=np.float64)
    cdef double[:, ::1] out = out_arr
    cdef double rc = sqrt(c), amp = c ** 0.25
    cdef double u, log0, mant, p_prev, p_cur, p_next, mag
    with nogil:
        for i in range(n_pts):
            u = rc * x[i]
            log0 = -0.25 * _LOG_PI - 0.5 * u * u
            exi = <int>floor(log0 / _LN2)
            mant = exp(log0 - exi * _LN2)
            out[i, 0] = amp * ldexp(mant, exi)
            if M == 1:
                continue
            p_prev = mant
            p_cur = u * sqrt(2.0) * mant
            out[i, 1] = amp * ldexp(p_cur, exi)
            for n in range(1, M - 1):
                p_next = u * sqrt(2.0 / (n + 1)) * p_cur - sqrt(n / (n + 1.0)) * p_prev
                mag = fabs(p_next)
                if fabs(p_cur) > mag:
                    mag = fabs(p_cur)
                if mag > _SCALE_HI:
                    p_next = ldexp(p_next, -500)
                    p_cur = ldexp(p_cur, -500)
                    exi += 500
                elif 0.0 < mag < _SCALE_LO:
                    p_next = ldexp(p_next, 500)
                    p_cur = ldexp(p_cur, 500)
                    exi -= 500
                out[i, n + 1] = amp * ldexp(p_next, exi)
                p_prev = p_cur
                p_cur = p_next
    return out_arr


def hs_norm_diff(a, b):
    """Hilbert-Schmidt norm of (a - b), accumulated in compensated (Neumaier) summation."""
    cdef const double[:, ::1] av = np.ascontiguousarray(a, dtype=np.float64)
    cdef const double[:, ::1] bv = np.ascontiguousarray(b, dtype=np.float64)
    cdef Py_ssize_t n = av.shape[0], m = av.shape[1], i, j
    if bv.shape[0] != n or bv.shape[1] != m:
        raise ValueError("shape mismatch")
    cdef double s = 0.0, comp = 0.0, d, term, t
    with nogil:
        for i in range(n):
            for j in range(m):
                d = av[i, j] - bv[i, j]
                term = d * d
                t = s + term
                if fabs(s) >= fabs(term):
                    comp += (s - t) + term
                else:
                    comp += (term - t) + s
                s = t
    return sqrt(s + comp)
