"""Backend selection for the hot scans.

The compiled extension is used when it imports; set ``CATKIT_PURE_PYTHON=1``
to force the numpy fallback.
"""
import os

from . import _kernels_py

if os.environ.get("CATKIT_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = "python" if _impl is _kernels_py else "compiled"

category_axioms = _impl.category_axioms
functor_composition = _impl.functor_composition
naturality = _impl.naturality
