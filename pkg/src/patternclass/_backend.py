"""Kernel backend selection.

The compiled ``_kernels`` extension is used when it imports; otherwise the
pure-Python ``_purepy`` module.  Setting ``PATTERNCLASS_PURE=1`` forces the
fallback.
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _purepy


def _load() -> ModuleType:
    if os.environ.get("PATTERNCLASS_PURE", "").strip() not in ("", "0"):
        return _purepy
    try:
        from . import _kernels
    except ImportError:
        return _purepy
    return _kernels


kernels: ModuleType = _load()
BACKEND: str = kernels.NAME


def available() -> dict[str, ModuleType]:
    """All importable backends by name."""
    out = {"python": _purepy}
    try:
        from . import _kernels
    except ImportError:
        pass
    else:
        out["cython"] = _kernels
    return out
