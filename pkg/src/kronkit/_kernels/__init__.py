"""Orbit kernels: compiled extension when available, pure-Python otherwise.

Set ``KRONKIT_PURE=1`` to force the pure fallback (used by the benchmark
and the kernel-equivalence tests).
"""

from __future__ import annotations

import os

from . import pure as _pure

if os.environ.get("KRONKIT_PURE") == "1":
    _impl = _pure
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _pure

IMPLEMENTATION: str = _impl.IMPLEMENTATION
conjugation_orbit_roots = _impl.conjugation_orbit_roots


def available_implementations():
    impls = {"pure": _pure}
    try:
        from . import _core

        impls["compiled"] = _core
    except ImportError:
        pass
    return impls
