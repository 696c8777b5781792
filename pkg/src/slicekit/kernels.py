"""Backend selection for the integer kernels.

The compiled ``_ckernels`` extension is used when importable; set the
environment variable ``SLICEKIT_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

if os.environ.get("SLICEKIT_PURE_PYTHON"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:  # extension not built
        _impl = _pykernels

BACKEND = "python" if _impl is _pykernels else "cython"

dominant_rep = _impl.dominant_rep
orbit = _impl.orbit
dominant_box = _impl.dominant_box

__all__ = ["BACKEND", "dominant_rep", "orbit", "dominant_box"]
