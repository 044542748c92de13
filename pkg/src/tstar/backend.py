"""Summation-kernel selection.

The compiled kernel (tstar._accel, built from _accel.pyx) is preferred when
it imported cleanly; the pure-Python kernel is always available.  Both
produce bit-identical output, so selection only affects speed.

The TSTAR_KERNEL environment variable ("compiled" or "python") pins the
choice at import time; kernel_for() lets callers override per call.
"""

from __future__ import annotations

import os

from . import _kernel_py

try:
    from . import _accel
except ImportError:
    _accel = None

_KERNELS = {"python": _kernel_py}
if _accel is not None:
    _KERNELS["compiled"] = _accel


def available_backends() -> tuple:
    return tuple(sorted(_KERNELS))


def default_backend() -> str:
    forced = os.environ.get("TSTAR_KERNEL")
    if forced:
        if forced not in _KERNELS:
            raise ValueError(
                f"TSTAR_KERNEL={forced!r} not available; have {available_backends()}"
            )
        return forced
    return "compiled" if "compiled" in _KERNELS else "python"


def kernel_for(name: str | None = None):
    """Resolve a kernel module by name ('python', 'compiled', or None for
    the default)."""
    if name is None or name == "auto":
        name = default_backend()
    if name not in _KERNELS:
        raise ValueError(f"unknown backend {name!r}; have {available_backends()}")
    return _KERNELS[name]
