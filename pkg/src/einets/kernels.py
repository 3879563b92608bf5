"""Backend selection for the exact linear-algebra kernels.

The compiled extension is used when it is importable and the
``EINETS_PURE_PYTHON`` environment variable is unset.
"""
import os

from einets import _kernels_py

BACKEND = "python"
if not os.environ.get("EINETS_PURE_PYTHON"):
    try:
        from einets import _kernels as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
else:
    _impl = _kernels_py

rref_key = _impl.rref_key
rank = _impl.rank

__all__ = ["BACKEND", "rref_key", "rank"]
