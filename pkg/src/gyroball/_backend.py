"""Kernel backend selection: compiled extension when available, numpy otherwise.

Set GYROBALL_PURE=1 to force the pure-Python kernels (used by the benchmark
and the backend-equivalence tests).
"""

import os

from . import _kernels_py

if os.environ.get("GYROBALL_PURE"):
    kernels = _kernels_py
else:
    try:
        from . import _kernels as kernels
    except ImportError:
        kernels = _kernels_py


def backend_name():
    """Name of the active kernel backend: "compiled" or "python"."""
    return kernels.BACKEND
