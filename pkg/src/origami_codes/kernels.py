"""Backend selection for the hot kernels.

The compiled extension is used when it was built; otherwise the pure-Python
twin is imported. Set ``ORIGAMI_CODES_PURE=1`` to force the fallback.
"""
from __future__ import annotations

import os

if os.environ.get("ORIGAMI_CODES_PURE"):
    from . import _pykernels as _impl
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _pykernels as _impl

BACKEND: str = _impl.BACKEND
compose = _impl.compose
inverse = _impl.inverse
orbit = _impl.orbit
best_labeling = _impl.best_labeling
anchored_conjugator = _impl.anchored_conjugator

__all__ = [
    "BACKEND",
    "compose",
    "inverse",
    "orbit",
    "best_labeling",
    "anchored_conjugator",
]
