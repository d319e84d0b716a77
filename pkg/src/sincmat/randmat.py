"""Random sample sets, the kernel matrix A_N, the design matrix H, and the
low-rank estimator H T_M H^T.

Sampling uses the counter-based Philox generator (numpy's Philox4x64-10),
so a SampleSet is reproducible bit for bit from (seed, N, distribution) and
Monte-Carlo trials can run concurrently on disjoint streams; the per-trial
seed is base_seed XOR trial_index.

Basis functions are orthonormal for the Lebesgue measure on [-1,1] while the
samples carry the uniform density 1/2, so E[H^T H / N] = I/2, not I. Nothing
here rescales that factor of 2 away; expectation checks belong to callers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._backend import hs_norm_diff, sinc_kernel_matrix
from .basis import BasisId, eval_matrix
from .errors import DomainError
from .kernelop import SINC, KernelSpec, TMatrix

UNIFORM = "uniform[-1,1]"
_DISTRIBUTIONS = (UNIFORM,)
_SEED_MASK = (1 << 64) - 1


def trial_seed(base_seed: int, trial: int) -> int:
    """Disjoint per-trial stream key: base_seed XOR trial, folded to 64 bits."""
    return (int(base_seed) ^ int(trial)) & _SEED_MASK


@dataclass(frozen=True)
class SampleSet:
    N: int
    xs: np.ndarray
    seed: int
    distribution: str


@dataclass(frozen=True)
class DesignMatrix:
    """N x M matrix H(i, m) = phi_{m-1}(X_i)."""

    N: int
    M: int
    basis: BasisId
    entries: np.ndarray


@dataclass(frozen=True)
class KernelMatrix:
    """A(i, j) = f(X_i, X_j); exactly symmetric, sinc diagonal exactly 1."""

    N: int
    entries: np.ndarray
    kernel: KernelSpec
    samples: SampleSet


@dataclass(frozen=True)
class EstimatorMatrix:
    """H T_M H^T, symmetrized; rank at most M."""

    N: int
    entries: np.ndarray
    M: int
    basis: BasisId


def draw_samples(N: int, distribution: str = UNIFORM, seed: int = 0) -> SampleSet:
    """N i.i.d. draws, deterministic per (seed, N, distribution)."""
    if N < 1:
        raise DomainError("N must be at least 1")
    if distribution not in _DISTRIBUTIONS:
        raise DomainError(f"unknown distribution {distribution!r}")
    seed = int(seed) & _SEED_MASK
    rng = np.random.Generator(np.random.Philox(seed))
    xs = rng.uniform(-1.0, 1.0, size=N)
    xs.flags.writeable = False
    return SampleSet(N, xs, seed, distribution)


def build_A(kernel: KernelSpec, samples: SampleSet) -> KernelMatrix:
    if kernel.kind == SINC:
        a = sinc_kernel_matrix(kernel.c, samples.xs)
    else:
        xs = samples.xs
        a = np.asarray(kernel.func(xs[:, None], xs[None, :]), dtype=np.float64)
        a = np.triu(a) + np.triu(a, 1).T    # mirror the upper triangle exactly
    a.flags.writeable = False
    return KernelMatrix(samples.N, a, kernel, samples)


def build_H(basis: BasisId, M: int, samples: SampleSet) -> DesignMatrix:
    h = eval_matrix(basis, M, samples.xs)
    h.flags.writeable = False
    return DesignMatrix(samples.N, M, basis, h)


def build_estimator(H: DesignMatrix, T: TMatrix) -> EstimatorMatrix:
    """Exact triple product H T H^T, then symmetrized by averaging.

    Dense: O(N^2) memory. For eigenvalues alone at large N, see
    estimator_spectrum.
    """
    if H.M != T.M:
        raise DomainError(f"column count {H.M} does not match T.M={T.M}")
    if H.basis != T.basis:
        raise DomainError(f"basis mismatch: {H.basis.kind} vs {T.basis.kind}")
    at = (H.entries @ T.entries) @ H.entries.T
    asym = float(np.abs(at - at.T).max())
    if asym > 1e-12:
        raise DomainError(f"estimator asymmetry {asym:.3e} exceeds 1e-12")
    at = 0.5 * (at + at.T)
    at.flags.writeable = False
    return EstimatorMatrix(H.N, at, H.M, H.basis)


def hs_residual(A: KernelMatrix, At: EstimatorMatrix):
    """Residual R = A - (H T H^T) and its Hilbert-Schmidt norm.

    The norm accumulates N^2 squared entries in compensated summation; plain
    summation loses digits once the residual sits near the 1e-13 plateau.
    """
    if A.N != At.N:
        raise DomainError(f"size mismatch: {A.N} vs {At.N}")
    r = A.entries - At.entries
    r.flags.writeable = False
    return r, float(hs_norm_diff(A.entries, At.entries))


def gram_truncated(H: DesignMatrix, M: int) -> np.ndarray:
    """G_M = H_M H_M^T with H_M the first M rows of H; symmetric PSD."""
    if H.N < M:
        raise DomainError(f"H has {H.N} rows, fewer than M={M}")
    hm = H.entries[:M]
    g = hm @ hm.T
    return 0.5 * (g + g.T)


def estimator_spectrum(H: DesignMatrix, T: TMatrix) -> np.ndarray:
    """The M potentially-nonzero eigenvalues of H T H^T, descending, without
    forming the N x N product.

    Nonzero spectrum of H T H^T equals that of S^T (H^T H) S where T = S S^T;
    S comes from the eigendecomposition of T with negative round-off
    eigenvalues clipped to zero. O(N M^2) instead of O(N^2 M).
    """
    if H.M != T.M:
        raise DomainError(f"column count {H.M} does not match T.M={T.M}")
    if H.basis != T.basis:
        raise DomainError(f"basis mismatch: {H.basis.kind} vs {T.basis.kind}")
    w, v = np.linalg.eigh(T.entries)
    s = v * np.sqrt(np.clip(w, 0.0, None))
    g = H.entries.T @ H.entries
    m = s.T @ g @ s
    m = 0.5 * (m + m.T)
    return np.linalg.eigvalsh(m)[::-1].copy()


def export_matrix_csv(path, matrix: np.ndarray, N: int, M: int, c, seed: int) -> None:
    """Row-major CSV, one header line {N, M, c, seed}, full-precision entries."""
    mat = np.asarray(matrix, dtype=np.float64)
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(f"# N={int(N)},M={int(M)},c={'' if c is None else repr(float(c))},"
                 f"seed={int(seed)}\n")
        for row in np.atleast_2d(mat):
            fh.write(",".join(repr(float(v)) for v in row) + "\n")
