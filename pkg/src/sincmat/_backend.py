"""Backend selection: compiled accelerator when available, numpy fallback otherwise.

Set SINCMAT_NO_ACCEL=1 to force the fallback (used by the benchmark and tests).
"""

import os

from ._accel import _fallback

if os.environ.get("SINCMAT_NO_ACCEL") == "1":
    _impl = _fallback
    _BACKEND = "python"
else:
    try:
        from ._accel import _core as _impl
        _BACKEND = "compiled"
    except ImportError:
        _impl = _fallback
        _BACKEND = "python"

sinc_scalar = _impl.sinc_scalar
sinc_kernel_matrix = _impl.sinc_kernel_matrix
legendre_design = _impl.legendre_design
hermite_design = _impl.hermite_design
hs_norm_diff = _impl.hs_norm_diff


def backend_name():
    """Which implementation is active: 'compiled' or 'python'."""
    return _BACKEND
