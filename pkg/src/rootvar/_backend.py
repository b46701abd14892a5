"""Kernel backend selection.

Hot numeric kernels exist in two implementations: numba-jitted loops
(``kernels_numba``) and pure-numpy equivalents (``kernels_numpy``).  The
active lane is chosen once at import time from the ROOTVAR_BACKEND
environment variable ("numba" or "numpy"); default is numba when it
imports, numpy otherwise.  ``benchmarks/bench_backends.py`` compares the
two lanes on the same inputs.
"""

from __future__ import annotations

import os

_VALID = ("numba", "numpy")


def _pick() -> str:
    req = os.environ.get("ROOTVAR_BACKEND", "").strip().lower()
    if req and req not in _VALID:
        raise ValueError(f"ROOTVAR_BACKEND must be one of {_VALID}, got {req!r}")
    if req == "numpy":
        return "numpy"
    try:
        import numba  # noqa: F401
    except ImportError:
        if req == "numba":
            raise
        return "numpy"
    return "numba"


BACKEND = _pick()

if BACKEND == "numba":
    from . import kernels_numba as kernels
else:
    from . import kernels_numpy as kernels


def get_kernels(name: str | None = None):
    """Return the kernel module for ``name`` (active lane if None)."""
    if name is None:
        return kernels
    if name == "numba":
        from . import kernels_numba
        return kernels_numba
    if name == "numpy":
        from . import kernels_numpy
        return kernels_numpy
    raise ValueError(f"unknown backend {name!r}")


def thread_count() -> int:
    """Worker count for sample-parallel work (ROOTVAR_THREADS caps it)."""
    env = os.environ.get("ROOTVAR_THREADS")
    if env:
        return max(1, int(env))
    return max(1, os.cpu_count() or 1)
