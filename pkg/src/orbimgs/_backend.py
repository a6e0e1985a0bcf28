"""Pick the compiled kernel when available, numpy otherwise."""

import os

from . import _fallback

_forced = os.environ.get("ORBIMGS_BACKEND", "").lower()

if _forced == "python":
    _impl = _fallback
    BACKEND = "python"
else:
    try:
        from . import _kernel as _impl
        BACKEND = "cython"
    except ImportError:
        if _forced == "cython":
            raise
        _impl = _fallback
        BACKEND = "python"

mutate_inplace = _impl.mutate_inplace
row_signs = _impl.row_signs

__all__ = ["BACKEND", "mutate_inplace", "row_signs"]
