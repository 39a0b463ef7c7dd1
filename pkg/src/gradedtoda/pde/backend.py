"""Pick the compiled march when it is built, the numpy one otherwise.

GRADEDTODA_PDE_BACKEND=python forces the fallback; =cython makes a missing
extension an error instead of a silent fallback.
"""

from __future__ import annotations

import os

from . import _fallback

try:
    from . import _kernels
except ImportError:  # not built
    _kernels = None


def available() -> dict:
    out = {"python": _fallback.march}
    if _kernels is not None:
        out["cython"] = _kernels.march
    return out


def select(name: str | None = None):
    """(backend name, march function)."""
    name = name or os.environ.get("GRADEDTODA_PDE_BACKEND", "auto")
    have = available()
    if name == "auto":
        name = "cython" if "cython" in have else "python"
    if name not in have:
        raise ImportError(f"pde backend {name!r} is not available (built: {', '.join(sorted(have))})")
    return name, have[name]


BACKEND, march = select()
