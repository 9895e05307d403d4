"""Backend selection for the base-60 digit kernels.

The compiled ``_ckernels`` extension is used when it imports; otherwise the
pure-Python ``_pykernels`` module is used.  Setting ``FARA_PURE_PYTHON=1`` in
the environment forces the fallback.
"""

import os

from fara import _pykernels

if os.environ.get("FARA_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from fara import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = "cython" if _impl is not _pykernels else "python"

cmp_mag = _impl.cmp_mag
add_mag = _impl.add_mag
sub_mag = _impl.sub_mag
mul_small = _impl.mul_small
mul_mag = _impl.mul_mag
divmod_small = _impl.divmod_small
divmod_mag = _impl.divmod_mag

__all__ = [
    "BACKEND",
    "cmp_mag",
    "add_mag",
    "sub_mag",
    "mul_small",
    "mul_mag",
    "divmod_small",
    "divmod_mag",
]
