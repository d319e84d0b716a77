"""Timing comparison: compiled extension vs pure-numpy fallback.

Covers the four hot kernels (sinc kernel matrix, the two design-matrix
recurrences, compensated HS norm). Run from the repo root after an editable
install:

    python3 benchmarks/bench_core.py [N]

N scales the problem (default 2000 sample points).
"""

from __future__ import annotations

import sys
import time

import numpy as np

from sincmat._accel import _fallback

try:
    from sincmat._accel import _core
except ImportError:
    _core = None


def _time(fn, *args, repeat=5):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> int:
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 2000
    rng = np.random.Generator(np.random.Philox(7))
    xs = rng.uniform(-1.0, 1.0, n)
    a = rng.standard_normal((n, n))
    b = a + 1e-9 * rng.standard_normal((n, n))

    cases = [
        ("sinc_kernel_matrix(c=20, %d pts)" % n, "sinc_kernel_matrix", (20.0, xs)),
        ("legendre_design(M=60)", "legendre_design", (xs, 60)),
        ("hermite_design(M=60, c=100)", "hermite_design", (xs, 60, 100.0)),
        ("hs_norm_diff(%dx%d)" % (n, n), "hs_norm_diff", (a, b)),
    ]
    if _core is None:
        print("compiled extension not built; timing fallback only")
    header = f"{'kernel':40s} {'fallback':>12s} {'compiled':>12s} {'speedup':>9s}"
    print(header)
    print("-" * len(header))
    for label, name, args in cases:
        t_py = _time(getattr(_fallback, name), *args)
        if _core is not None:
            t_c = _time(getattr(_core, name), *args)
            print(f"{label:40s} {t_py * 1e3:10.2f}ms {t_c * 1e3:10.2f}ms "
                  f"{t_py / t_c:8.2f}x")
        else:
            print(f"{label:40s} {t_py * 1e3:10.2f}ms {'-':>12s} {'-':>9s}")
    if _core is not None:
        for label, name, args in cases:
            r_py = np.asarray(getattr(_fallback, name)(*args), dtype=np.float64)
            r_c = np.asarray(getattr(_core, name)(*args), dtype=np.float64)
            worst = float(np.max(np.abs(r_py - r_c)))
            print(f"agreement {name}: max abs diff {worst:.3e}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
