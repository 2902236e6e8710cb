"""Select the compiled kernels when available, else the pure-Python ones.

Set ``SPHERE_CLOSURE_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _kernels_py

BACKEND = "python"

if os.environ.get("SPHERE_CLOSURE_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
else:
    _impl = _kernels_py

invert_batch = _impl.invert_batch
exact_checks = _impl.exact_checks
numeric_residuals = _impl.numeric_residuals

__all__ = ["BACKEND", "invert_batch", "exact_checks", "numeric_residuals"]
