"""Backend selection for the integer kernels.

The compiled extension is used when it imports; otherwise the pure-Python
module is used.  Setting ``POSICERT_PURE=1`` forces the fallback.
"""

import os

from . import _kernels_py as pure

if os.environ.get("POSICERT_PURE", "") not in ("", "0"):
    _impl = pure
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = pure

BACKEND = "pure" if _impl is pure else "compiled"

poly_mul = _impl.poly_mul
homog_eval = _impl.homog_eval
bareiss_det = _impl.bareiss_det
leading_minors = _impl.leading_minors
first_negative_2minor = _impl.first_negative_2minor

__all__ = [
    "BACKEND",
    "poly_mul",
    "homog_eval",
    "bareiss_det",
    "leading_minors",
    "first_negative_2minor",
]
