"""Pure-numpy implementations of the hot kernels.

Same contracts as the compiled module `_core`; selected at import time when the
extension is unavailable or SINCMAT_NO_ACCEL=1.
"""

import math

import numpy as np

# u below this uses the Taylor form of sin(u)/u; keeps relative error < 1e-15
_SINC_TAYLOR_CUT = 1e-4
# mantissa band for the Hermite rescaling ledger
_SCALE_HI = 1e150
_SCALE_LO = 1e-150


def sinc_scalar(c, u):
    """sin(c*u)/(c*u) with the removable singularity handled."""
    z = c * u
    if abs(z) < _SINC_TAYLOR_CUT:
        z2 = z * z
        return 1.0 - z2 / 6.0 + z2 * z2 / 120.0
    return math.sin(z) / z


def sinc_kernel_matrix(c, xs):
    """N x N matrix sinc(c*(x_i - x_j)), exactly symmetric (upper-triangle fill)."""
    xs = np.asarray(xs, dtype=np.float64)
    n = xs.size
    out = np.ones((n, n))
    iu, ju = np.triu_indices(n, k=1)
    z = c * (xs[iu] - xs[ju])
    vals = np.empty_like(z)
    small = np.abs(z) < _SINC_TAYLOR_CUT
    zs = z[small]
    vals[small] = 1.0 - zs * zs / 6.0 + zs ** 4 / 120.0
    zb = z[~small]
    vals[~small] = np.sin(zb) / zb
    out[iu, ju] = vals
    out[ju, iu] = vals
    return out


def legendre_design(xs, M):
    """N x M matrix of normalized Legendre values sqrt(n+1/2) P_n(x), n = 0..M-1."""
    xs = np.asarray(xs, dtype=np.float64)
    out = np.empty((xs.size, M))
    out[:, 0] = 1.0
    if M > 1:
        out[:, 1] = xs
        for k in range(1, M - 1):
            out[:, k + 1] = ((2 * k + 1) * xs * out[:, k] - k * out[:, k - 1]) / (k + 1)
    out *= np.sqrt(np.arange(M) + 0.5)
    return out


def hermite_design(xs, M, c):
    """N x M matrix of scaled Hermite values c^(1/4) phi_n(sqrt(c) x), n = 0..M-1.

    The three-term recurrence runs on a mantissa plus a per-point power-of-two
    exponent so that deep-tail starting values (phi_0 underflows for
    |sqrt(c) x| >~ 38.6) are not flushed to zero and nothing can overflow.
    """
    u = np.sqrt(c) * np.asarray(xs, dtype=np.float64)
    n_pts = u.size
    out = np.empty((n_pts, M))
    # split phi_0 = pi^(-1/4) exp(-u^2/2) into mantissa * 2^ex
    log0 = -0.25 * math.log(math.pi) - 0.5 * u * u
    ex = np.floor(log0 / math.log(2.0))
    mant = np.exp(log0 - ex * math.log(2.0))
    exi = ex.astype(np.int64)
    out[:, 0] = np.ldexp(mant, exi)
    if M == 1:
        return (c ** 0.25) * out
    p_prev = mant
    p_cur = u * math.sqrt(2.0) * mant
    out[:, 1] = np.ldexp(p_cur, exi)
    for n in range(1, M - 1):
        p_next = u * math.sqrt(2.0 / (n + 1)) * p_cur - math.sqrt(n / (n + 1)) * p_prev
        mag = np.maximum(np.abs(p_next), np.abs(p_cur))
        hi = mag > _SCALE_HI
        lo = (mag < _SCALE_LO) & (mag > 0.0)
        if hi.any():
            p_next[hi] = np.ldexp(p_next[hi], -500)
            p_cur = p_cur.copy()
            p_cur[hi] = np.ldexp(p_cur[hi], -500)
            exi[hi] += 500
        if lo.any():
            p_next[lo] = np.ldexp(p_next[lo], 500)
            p_cur = p_cur.copy()
            p_cur[lo] = np.ldexp(p_cur[lo], 500)
            exi[lo] -= 500
        out[:, n + 1] = np.ldexp(p_next, exi)
        p_prev, p_cur = p_cur, p_next
    return (c ** 0.25) * out


def hs_norm_diff(a, b):
    """Hilbert-Schmidt norm of (a - b), accumulated in compensated summation."""
    d = (np.asarray(a, dtype=np.float64) - np.asarray(b, dtype=np.float64)).ravel()
    return math.sqrt(math.fsum(d * d))
