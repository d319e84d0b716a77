"""Orthonormal evaluation bases: normalized Legendre polynomials on [-1,1] and
scaled Hermite functions on the real line.

Both families are evaluated through three-term recurrences only; factorials and
explicit polynomial coefficients never appear. The Hermite functions use the
orthonormal convention phi_n(x) = H_n(x) exp(-x^2/2) / (pi^(1/4) 2^(n/2) sqrt(n!)),
and the scaled family is phi_n^(c)(t) = c^(1/4) phi_n(sqrt(c) t), which is again
orthonormal in L2(R).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._backend import hermite_design, legendre_design
from .errors import DomainError

LEGENDRE = "legendre-normalized"
HERMITE = "scaled-hermite"

# round-off from sample generation may land a hair outside [-1,1]
_EDGE_TOL = 1e-14


@dataclass(frozen=True)
class BasisId:
    """Identifies an orthonormal family; Hermite carries its bandwidth c."""

    kind: str
    c: float | None = None

    def __post_init__(self):
        if self.kind not in (LEGENDRE, HERMITE):
            raise DomainError(f"unknown basis kind {self.kind!r}")
        if self.kind == HERMITE:
            if self.c is None or not self.c > 0:
                raise DomainError("scaled-hermite basis requires c > 0")
        elif self.c is not None:
            raise DomainError("legendre basis takes no bandwidth")


def legendre_basis() -> BasisId:
    return BasisId(LEGENDRE)


def hermite_basis(c: float) -> BasisId:
    return BasisId(HERMITE, float(c))


def _clamp_unit(xs):
    """Clamp to [-1,1], tolerating _EDGE_TOL of round-off; reject beyond that."""
    xs = np.asarray(xs, dtype=np.float64)
    if xs.ndim != 1:
        raise DomainError("sample points must be one-dimensional")
    over = np.abs(xs) - 1.0
    if np.any(over > _EDGE_TOL):
        worst = float(xs[np.argmax(over)])
        raise DomainError(f"evaluation point {worst} outside [-1, 1]")
    return np.clip(xs, -1.0, 1.0)


def legendre_norm_eval(n: int, x: float) -> float:
    """sqrt(n + 1/2) * P_n(x), the L2([-1,1])-orthonormal Legendre polynomial."""
    if n < 0:
        raise DomainError("polynomial index must be nonnegative")
    xs = _clamp_unit(np.array([float(x)]))
    return float(legendre_design(xs, n + 1)[0, n])


def hermite_scaled_eval(n: int, c: float, t: float) -> float:
    """c^(1/4) * phi_n(sqrt(c) t), the scaled orthonormal Hermite function.

    Safe (no overflow, no spurious flush-to-zero) for n <= 500, |t| <= 1,
    c <= 1e4; the recurrence carries a per-point power-of-two scale.
    """
    if n < 0:
        raise DomainError("function index must be nonnegative")
    if not c > 0:
        raise DomainError("bandwidth c must be positive")
    return float(hermite_design(np.array([float(t)]), n + 1, c)[0, n])


def eval_matrix(basis: BasisId, M: int, xs) -> np.ndarray:
    """N x M matrix with entry (i, m) = basis function of index m-1 at xs[i].

    Filled row-major: each row holds one point's values for indices 0..M-1.
    """
    if M < 1:
        raise DomainError("M must be at least 1")
    xs = _clamp_unit(xs)
    if basis.kind == LEGENDRE:
        return legendre_design(xs, M)
    return hermite_design(xs, M, basis.c)
