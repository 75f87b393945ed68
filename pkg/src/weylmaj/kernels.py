"""Kernel selection.

The compiled extension is used when it imports; otherwise the pure-Python
fallback.  Set ``WEYLMAJ_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _fallback

if os.environ.get("WEYLMAJ_PURE_PYTHON", "") not in ("", "0"):
    _impl = _fallback
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl

        BACKEND = "compiled"
    except ImportError:
        _impl = _fallback
        BACKEND = "python"

accumulate = _impl.accumulate
involution_census = _impl.involution_census

FAMILY_CODES = {"s": 0, "b": 1, "d": 2, "delta": 3}
STAT_CODES = {"inv": 0, "maj": 1, "fmaj": 2, "dmaj": 3, "len-s": 4, "len-b": 5, "len-d": 6}
CHAR_CODES = {"trivial": 0, "sign": 1, "negparity": 2, "abssign": 3}
PARITY_CODES = {"all": 0, "even": 1, "odd": 2}


def get_backend(backend: str | None = None):
    """Kernel module for ``backend`` (``"compiled"``, ``"python"``, or None for the default)."""
    if backend is None:
        return _impl
    if backend == "python":
        return _fallback
    if backend == "compiled":
        from . import _kernels

        return _kernels
    raise ValueError(f"unknown backend {backend!r}")


def get_accumulate(backend: str | None = None):
    return get_backend(backend).accumulate
