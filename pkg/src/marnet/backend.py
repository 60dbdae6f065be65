"""Backend selection for the hot enumeration kernels.

Two interchangeable implementations exist: a numba-jitted per-machine
simulator and a vectorised pure-numpy lockstep simulator. Both produce
bit-identical count maps. Selection order:

1. ``MARNET_BACKEND`` environment variable (``numba`` or ``numpy``).
2. ``numpy`` if numba is missing or ``NUMBA_DISABLE_JIT`` is set.
3. ``numba`` otherwise.
"""

from __future__ import annotations

import os

BACKENDS = ("numba", "numpy")


def numba_available() -> bool:
    if os.environ.get("NUMBA_DISABLE_JIT", "").strip() not in ("", "0"):
        return False
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


def active_backend(override: str | None = None) -> str:
    """Resolve the backend name, validating overrides."""
    choice = override or os.environ.get("MARNET_BACKEND", "").strip().lower() or None
    if choice is not None:
        if choice not in BACKENDS:
            raise ValueError(f"unknown backend {choice!r}, expected one of {BACKENDS}")
        if choice == "numba" and not numba_available():
            raise RuntimeError("numba backend requested but numba is unavailable")
        return choice
    return "numba" if numba_available() else "numpy"
