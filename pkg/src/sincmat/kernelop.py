"""Kernels, quadrature, the deterministic Galerkin matrix T_M, and the
bandlimited (prolate) eigenproblem.

T_M(m, n) = integral over [-1,1]^2 of f(x, y) phi_{m-1}(x) phi_{n-1}(y) dx dy,
computed with a tensor-product Gauss-Legendre rule. For the sinc kernel the
integrand is (polynomial) x (bandlimited), so the rule order must satisfy
K >= max(2M, ceil(e c) + 20); assembly refuses coarser rules. Scaled by c/pi,
the Legendre-basis T carries the spectrum of the time-frequency limiting
operator, which is how the prolate eigenvalues lambda_n(c) are produced here.
"""

from __future__ import annotations

import json
import math
from collections import namedtuple
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np
from scipy.integrate import quad
from scipy.special import spherical_jn

from ._backend import sinc_kernel_matrix, sinc_scalar
from .basis import HERMITE, LEGENDRE, BasisId, eval_matrix, legendre_basis
from .bounds import landau_widom_M
from .errors import DomainError, NumericalError, ResolutionError

SINC = "sinc"
CUSTOM = "custom"

_MAX_RULE = 5000


@dataclass(frozen=True)
class KernelSpec:
    """Symmetric kernel on [-1,1]^2 with its sup bound and L2 norm.

    kind 'sinc' has f(x, y) = sin(c(x-y))/(c(x-y)), value exactly 1 on the
    diagonal, sup_bound 1. kind 'custom' wraps a caller-supplied symmetric
    function together with caller-supplied norms.
    """

    kind: str
    c: float | None
    func: Callable
    sup_bound: float
    l2_norm: float


@lru_cache(maxsize=None)
def _sinc_l2_norm(c: float) -> float:
    """L2([-1,1]^2) norm of the sinc kernel via a 400-node tensor rule."""
    rule = gauss_legendre_rule(400)
    f = sinc_kernel_matrix(c, rule.nodes)
    return math.sqrt(float(np.einsum("i,ij,j->", rule.weights, f * f, rule.weights)))


def sinc_kernel(c: float) -> KernelSpec:
    if not c > 0:
        raise DomainError("bandwidth c must be positive")
    c = float(c)

    def f(x, y):
        z = c * (np.asarray(x, dtype=np.float64) - np.asarray(y, dtype=np.float64))
        out = np.ones_like(z)
        big = np.abs(z) >= 1e-4
        out = np.where(big, np.divide(np.sin(z), np.where(big, z, 1.0)),
                       1.0 - z * z / 6.0 + z ** 4 / 120.0)
        return out

    return KernelSpec(SINC, c, f, 1.0, _sinc_l2_norm(c))


def custom_kernel(func: Callable, sup_bound: float, l2_norm: float) -> KernelSpec:
    if not callable(func):
        raise DomainError("custom kernel func must be callable")
    if not sup_bound > 0 or not l2_norm > 0:
        raise DomainError("custom kernels need positive sup_bound and l2_norm")
    return KernelSpec(CUSTOM, None, func, float(sup_bound), float(l2_norm))


@dataclass(frozen=True)
class QuadratureRule:
    """Gauss-Legendre nodes/weights on [-1,1]; order K integrates degree 2K-1."""

    nodes: np.ndarray
    weights: np.ndarray
    order: int


@lru_cache(maxsize=32)
def gauss_legendre_rule(K: int) -> QuadratureRule:
    """K-node Gauss-Legendre rule: roots of P_K by Newton iteration from
    Chebyshev initial guesses, converged to 1e-15; weights 2/((1-x^2) P_K'^2)."""
    if not (1 <= K <= _MAX_RULE):
        raise DomainError(f"rule order must lie in [1, {_MAX_RULE}]")
    if K == 1:
        return QuadratureRule(np.zeros(1), np.full(1, 2.0), 1)
    i = np.arange(K)
    x = np.cos(math.pi * (4 * i + 3) / (4 * K + 2))
    for _ in range(100):
        # P_K and P_K' at all current iterates via the three-term recurrence
        p_prev = np.ones_like(x)
        p_cur = x.copy()
        for k in range(1, K):
            p_prev, p_cur = p_cur, ((2 * k + 1) * x * p_cur - k * p_prev) / (k + 1)
        dp = K * (x * p_cur - p_prev) / (x * x - 1.0)
        dx = p_cur / dp
        x -= dx
        if np.abs(dx).max() <= 1e-15:
            break
    else:
        raise NumericalError("Gauss-Legendre Newton iteration did not converge")
    # final derivative at the converged roots
    p_prev = np.ones_like(x)
    p_cur = x.copy()
    for k in range(1, K):
        p_prev, p_cur = p_cur, ((2 * k + 1) * x * p_cur - k * p_prev) / (k + 1)
    dp = K * (x * p_cur - p_prev) / (x * x - 1.0)
    w = 2.0 / ((1.0 - x * x) * dp * dp)
    order = np.argsort(x)
    x, w = x[order], w[order]
    # symmetrize exactly: average mirrored pairs, zero the middle node if K odd
    x = 0.5 * (x - x[::-1])
    w = 0.5 * (w + w[::-1])
    x.flags.writeable = False
    w.flags.writeable = False
    return QuadratureRule(x, w, K)


def sinc_eval(c: float, u: float) -> float:
    """sin(c u)/(c u); |c u| < 1e-4 switches to the Taylor form (rel err <= 1e-15)."""
    if not c > 0:
        raise DomainError("bandwidth c must be positive")
    return float(sinc_scalar(c, float(u)))


def min_rule_order(kernel: KernelSpec, M: int) -> int:
    """Smallest accepted quadrature order for assembling T_M with this kernel."""
    if kernel.kind == SINC:
        return max(2 * M, math.ceil(math.e * kernel.c) + 20)
    return 2 * M


def default_rule(kernel: KernelSpec, M: int) -> QuadratureRule:
    need = min_rule_order(kernel, M)
    if need > _MAX_RULE:
        raise ResolutionError(
            f"kernel needs rule order >= {need}, above the supported "
            f"maximum {_MAX_RULE}")
    return gauss_legendre_rule(need)


@dataclass(frozen=True)
class TMatrix:
    """M x M Galerkin matrix of a kernel against an orthonormal basis."""

    M: int
    basis: BasisId
    entries: np.ndarray
    kernel: KernelSpec

    def to_json(self) -> str:
        return json.dumps({
            "c": self.kernel.c,
            "M": self.M,
            "basis": self.basis.kind,
            "entries": [float(v) for v in self.entries.ravel()],
        }, sort_keys=True)


def assemble_T(kernel: KernelSpec, basis: BasisId, M: int,
               rule: QuadratureRule | None = None) -> TMatrix:
    """Tensor-quadrature assembly of T_M, symmetrized by averaging.

    Refuses rules below min_rule_order; pre-averaging asymmetry must stay
    under 1e-12 and the result must be positive semi-definite to round-off.
    """
    if M < 1:
        raise DomainError("M must be at least 1")
    if rule is None:
        rule = default_rule(kernel, M)
    need = min_rule_order(kernel, M)
    if rule.order < need:
        raise ResolutionError(
            f"rule order {rule.order} too coarse; this kernel and M={M} "
            f"need order >= {need}")
    xs = rule.nodes
    if kernel.kind == SINC:
        f = sinc_kernel_matrix(kernel.c, xs)
    else:
        f = np.asarray(kernel.func(xs[:, None], xs[None, :]), dtype=np.float64)
        if f.shape != (xs.size, xs.size):
            f = np.vectorize(kernel.func)(xs[:, None], xs[None, :])
    phi_w = eval_matrix(basis, M, xs) * rule.weights[:, None]
    t = phi_w.T @ f @ phi_w
    asym = float(np.abs(t - t.T).max())
    if asym > 1e-12:
        raise NumericalError(f"assembly asymmetry {asym:.3e} exceeds 1e-12")
    t = 0.5 * (t + t.T)
    ev = np.linalg.eigvalsh(t)
    if ev[0] < -1e-10 * max(ev[-1], 0.0):
        raise NumericalError(f"assembled matrix not PSD: min eigenvalue {ev[0]:.3e}")
    t.flags.writeable = False
    return TMatrix(M, basis, t, kernel)


def assemble_T_sinc_oracle(c: float, M: int) -> TMatrix:
    """Independent route to the sinc-kernel Legendre T_M.

    Expands the kernel in plane waves and maps normalized Legendre polynomials
    through their spherical-Bessel transform, leaving one adaptive quadrature
    per entry: T(k, j) = 2 Re(i^(k-j)) sqrt((k-1/2)(j-1/2)) *
    integral_{-1}^{1} j_{k-1}(cs) j_{j-1}(cs) ds; odd k-j entries are exactly 0.
    """
    if not c > 0:
        raise DomainError("bandwidth c must be positive")
    if not (1 <= M <= 200):
        raise DomainError("oracle supports 1 <= M <= 200")
    t = np.zeros((M, M))
    for k in range(1, M + 1):
        for j in range(k, M + 1):
            if (j - k) % 2:
                continue
            sign = 1.0 if (j - k) % 4 == 0 else -1.0
            val, _ = quad(lambda s: spherical_jn(k - 1, c * s) * spherical_jn(j - 1, c * s),
                          0.0, 1.0, epsabs=1e-13, epsrel=1e-13, limit=300)
            entry = 2.0 * sign * math.sqrt((k - 0.5) * (j - 0.5)) * 2.0 * val
            t[k - 1, j - 1] = entry
            t[j - 1, k - 1] = entry
    t.flags.writeable = False
    return TMatrix(M, legendre_basis(), t, sinc_kernel(c))


@dataclass(frozen=True)
class PswfSet:
    """Leading prolate eigenvalues and their normalized-Legendre coefficients.

    lambdas[n] estimates the n-th eigenvalue of the time-frequency limiting
    operator for bandwidth c; column n of coeffs expands the n-th eigenfunction
    in the normalized Legendre basis.
    """

    c: float
    count: int
    lambdas: np.ndarray
    coeffs: np.ndarray

    def to_json(self) -> str:
        return json.dumps({
            "c": self.c,
            "M": self.coeffs.shape[0],
            "basis": LEGENDRE,
            "lambdas": [float(v) for v in self.lambdas],
            "coeffs": [float(v) for v in self.coeffs.ravel()],
        }, sort_keys=True)


def pswf_solve(c: float, M: int, rule: QuadratureRule | None = None) -> PswfSet:
    """Eigendecomposition of the Legendre-basis sinc T_M.

    lambdas[n] = (c/pi) times the n-th largest eigenvalue, clipped into
    (eps, 1-eps); eigenvector signs are fixed so the largest-magnitude
    coefficient is positive. Only the first count = M - 10 pairs are exposed;
    the last ten are truncation-polluted. Clipping can tie noise-level tail
    values, so equal neighbors are nudged apart (nextafter toward zero) to
    keep the sequence strictly decreasing; the nudge is one ulp and
    deterministic.
    """
    if M < 11:
        raise DomainError("M must be at least 11: the last 10 eigenpairs are "
                          "discarded as truncation-polluted")
    need = landau_widom_M(c, 8.0)
    if M < need:
        raise DomainError(f"M={M} leaves the transition region unresolved; "
                          f"need M >= {need} for c={c}")
    t = assemble_T(sinc_kernel(c), legendre_basis(), M, rule)
    try:
        w, v = np.linalg.eigh(t.entries)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"eigensolver failed: {exc}") from None
    order = np.argsort(w)[::-1]
    w, v = w[order], v[:, order]
    eps = float(np.finfo(np.float64).eps)
    lam = np.clip((c / math.pi) * w, eps, 1.0 - eps)
    for i in range(1, lam.size):
        if lam[i] >= lam[i - 1]:
            lam[i] = np.nextafter(lam[i - 1], 0.0)
    count = M - 10
    lam = lam[:count].copy()
    coeffs = v[:, :count].copy()
    for n in range(count):
        j = int(np.argmax(np.abs(coeffs[:, n])))
        if coeffs[j, n] < 0:
            coeffs[:, n] = -coeffs[:, n]
    lam.flags.writeable = False
    coeffs.flags.writeable = False
    return PswfSet(float(c), count, lam, coeffs)


def pswf_eval(pset: PswfSet, n: int, x) -> float | np.ndarray:
    """Eigenfunction n at x via its normalized-Legendre expansion."""
    if not (0 <= n < pset.count):
        raise DomainError(f"eigenfunction index {n} out of range [0, {pset.count})")
    xs = np.atleast_1d(np.asarray(x, dtype=np.float64))
    vals = eval_matrix(legendre_basis(), pset.coeffs.shape[0], xs) @ pset.coeffs[:, n]
    return float(vals[0]) if np.ndim(x) == 0 else vals


def nystrom_lambdas(c: float, count: int = 10, grid: int = 2000) -> np.ndarray:
    """Independent eigenvalue route: Gauss-grid discretization of the
    homogeneous integral equation with kernel sin(c(x-y))/(pi(x-y))."""
    rule = gauss_legendre_rule(grid)
    sw = np.sqrt(rule.weights)
    a = (c / math.pi) * sinc_kernel_matrix(c, rule.nodes) * sw[:, None] * sw[None, :]
    ev = np.linalg.eigvalsh(a)[::-1]
    return ev[:count]


TailNorm = namedtuple("TailNorm", ["value", "level"])


def residual_tail_norm(kernel: KernelSpec, basis: BasisId, M: int, M_big: int,
                       rule: QuadratureRule | None = None) -> TailNorm:
    """L2([-1,1]^2) norm of the kernel's expansion remainder past the M x M
    coefficient block, measured at truncation level M_big.

    The value is sqrt(sum of t_kl^2 over (k, l) inside the M_big block but
    outside the M block). M >= M_big returns 0 directly (empty tail at the
    computed resolution); otherwise M_big must be >= 2M, and >= the
    transition-region size for the sinc kernel.
    """
    if M < 1:
        raise DomainError("M must be at least 1")
    if M >= M_big:
        return TailNorm(0.0, M_big)
    if M_big < 2 * M:
        raise ResolutionError(f"M_big={M_big} too small; need M_big >= {2 * M}")
    if kernel.kind == SINC and M_big < landau_widom_M(kernel.c, 12.0):
        raise ResolutionError(
            f"M_big={M_big} leaves the sinc transition region unresolved; "
            f"need M_big >= {landau_widom_M(kernel.c, 12.0)}")
    t = assemble_T(kernel, basis, M_big, rule).entries
    mask = np.ones((M_big, M_big), dtype=bool)
    mask[:M, :M] = False
    sq = t[mask] ** 2
    return TailNorm(math.sqrt(math.fsum(sq.tolist())), M_big)
