"""Symmetric eigendecomposition and spectral summaries.

Spectra are sorted descending everywhere. The rank threshold used by callers
to declare an eigenvalue "zero" is relative, 1e-10 times the largest
eigenvalue; round-off in an N x N decomposition scales with the spectral
radius, so an absolute cutoff would misclassify at large N.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NumericalError

AT_LEAST = "at_least"
NEAR = "near"
COUNT = "count"
DENSITY = "density"


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues sorted descending; residual_bound is a backward-error
    estimate max ||A v - lambda v|| taken over the extreme eigenpairs."""

    values: np.ndarray
    source_dim: int
    residual_bound: float


@dataclass(frozen=True)
class SpectralHistogram:
    edges: np.ndarray
    counts: np.ndarray
    normalization: str


def sym_eigvals(matrix: np.ndarray) -> Spectrum:
    """All eigenvalues of a real symmetric matrix, descending.

    Rejects input whose symmetry departure exceeds 1e-10 * max|entry|.
    Backward error ||A v - lambda v|| is verified on the extreme pairs
    against 1e-10 * ||A||_2.
    """
    a = np.asarray(matrix, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise DomainError(f"expected a nonempty square matrix, got shape {a.shape}")
    scale = float(np.abs(a).max())
    dep = float(np.abs(a - a.T).max())
    if dep > 1e-10 * scale:
        raise DomainError(f"symmetry departure {dep:.3e} exceeds "
                          f"1e-10 * max|entry| = {1e-10 * scale:.3e}")
    a = 0.5 * (a + a.T)
    try:
        w, v = np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"eigensolver failed: {exc}") from None
    w = w[::-1].copy()
    nrm = max(abs(float(w[0])), abs(float(w[-1])))    # 2-norm of a symmetric matrix
    res = 0.0
    for idx in (-1, 0):    # eigh returns ascending: extremes at both ends
        vec = v[:, idx]
        res = max(res, float(np.linalg.norm(a @ vec - (w[0] if idx == -1 else w[-1]) * vec)))
    if res > 1e-10 * nrm and nrm > 0:
        raise NumericalError(f"backward error {res:.3e} exceeds 1e-10 * ||A||")
    w.flags.writeable = False
    return Spectrum(w, a.shape[0], res)


def weyl_check(spec_a: Spectrum, spec_b: Spectrum, hs: float):
    """(ok, gap): gap = max_j |a_j - b_j|; ok iff gap <= hs + 1e-10.

    Sorted eigenvalue perturbations are bounded by any unitarily invariant
    norm of the difference, in particular the Hilbert-Schmidt norm.
    """
    if spec_a.values.size != spec_b.values.size:
        raise DomainError(f"length mismatch: {spec_a.values.size} vs "
                          f"{spec_b.values.size}")
    gap = float(np.abs(spec_a.values - spec_b.values).max())
    return gap <= hs + 1e-10, gap


def count_threshold(spec: Spectrum, thr: float, mode: str = AT_LEAST,
                    radius: float | None = None) -> int:
    """mode 'at_least': #{values >= thr}. mode 'near': #{values within
    [thr - radius, thr + radius]} (thr plays the center)."""
    vals = spec.values
    if mode == AT_LEAST:
        return int(np.count_nonzero(vals >= thr))
    if mode == NEAR:
        if radius is None or radius < 0:
            raise DomainError("mode 'near' needs a nonnegative radius")
        return int(np.count_nonzero((vals >= thr - radius) & (vals <= thr + radius)))
    raise DomainError(f"unknown mode {mode!r}")


def histogram(spec: Spectrum, edges: np.ndarray | None = None,
              normalization: str = COUNT) -> SpectralHistogram:
    """Bin eigenvalues into half-open bins [e_k, e_{k+1}), last bin closed.

    Values sitting exactly on an interior edge land in the bin to the right.
    Auto binning is Freedman-Diaconis with a floor of 10 bins; a degenerate
    spread falls back to 10 bins over a unit-width window.
    """
    vals = np.asarray(spec.values, dtype=np.float64)
    if vals.size == 0:
        raise DomainError("cannot bin an empty spectrum")
    if normalization not in (COUNT, DENSITY):
        raise DomainError(f"unknown normalization {normalization!r}")
    if edges is None:
        lo, hi = float(vals.min()), float(vals.max())
        q75, q25 = np.percentile(vals, [75.0, 25.0])
        width = 2.0 * (q75 - q25) / vals.size ** (1.0 / 3.0)
        if width > 0 and hi > lo:
            nbins = max(10, int(math.ceil((hi - lo) / width)))
        else:
            nbins = 10
        if hi <= lo:
            lo, hi = lo - 0.5, hi + 0.5
        edges = np.linspace(lo, hi, nbins + 1)
    else:
        edges = np.asarray(edges, dtype=np.float64)
        if edges.ndim != 1 or edges.size < 2 or not np.all(np.diff(edges) > 0):
            raise DomainError("edges must be strictly increasing with >= 2 entries")
    counts, _ = np.histogram(vals, bins=edges)
    edges = edges.copy()
    edges.flags.writeable = False
    counts.flags.writeable = False
    return SpectralHistogram(edges, counts, normalization)


def spectrum_to_csv(path, spec: Spectrum) -> None:
    """One eigenvalue per line, descending, full precision."""
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        for v in spec.values:
            fh.write(repr(float(v)) + "\n")


def histogram_to_csv(path, hist: SpectralHistogram) -> None:
    """Lines of left_edge,count; a final line carries the rightmost edge with
    an empty count field. Density normalization divides counts by
    (total * bin width)."""
    counts = hist.counts.astype(np.float64)
    if hist.normalization == DENSITY:
        total = counts.sum()
        widths = np.diff(hist.edges)
        counts = counts / (total * widths) if total > 0 else counts
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write("edge,count\n")
        for e, k in zip(hist.edges[:-1], counts):
            val = repr(float(k)) if hist.normalization == DENSITY else str(int(k))
            fh.write(f"{repr(float(e))},{val}\n")
        fh.write(f"{repr(float(hist.edges[-1]))},\n")
