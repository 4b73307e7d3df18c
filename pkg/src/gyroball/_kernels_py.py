"""Pure-Python (numpy) hot kernels: Einstein addition, gyrations.

Mirror of the compiled extension `gyroball._kernels`. These functions are
the unvalidated fast path: inputs are assumed to be float64 vectors of equal
dimension strictly inside the unit ball. Use the `gyro` module for the
checked public API.
"""

import warnings

import numpy as np

from .exceptions import BoundaryClampWarning

BACKEND = "python"

# Rounding can push a result onto/past the boundary only when the exact value
# is within ~1e-15 of it; such results are pulled back to this norm.
_CLAMP_NORM = 1.0 - 1e-12


def gamma(v):
    """Lorentz factor 1/sqrt(1 - |v|^2), c = 1."""
    return 1.0 / np.sqrt(1.0 - v @ v)


def _clamp(w):
    ns = w @ w
    if ns >= 1.0:
        warnings.warn(
            "rounding produced a point outside the ball; rescaled inside",
            BoundaryClampWarning,
            stacklevel=3,
        )
        w *= _CLAMP_NORM / np.sqrt(ns)
    return w


def add(u, v):
    """Einstein velocity addition u (+) v."""
    uv = u @ v
    g = gamma(u)
    f = 1.0 / (1.0 + uv)
    w = f * ((1.0 + (g / (1.0 + g)) * uv) * u + v / g)
    return _clamp(w)


def add_batch(u, vs):
    """Einstein addition of a single u against a (k, n) stack of vectors."""
    uv = vs @ u
    g = gamma(u)
    f = 1.0 / (1.0 + uv)
    w = f[:, None] * ((1.0 + (g / (1.0 + g)) * uv)[:, None] * u + vs / g)
    ns = np.einsum("ij,ij->i", w, w)
    bad = ns >= 1.0
    if bad.any():
        warnings.warn(
            "rounding produced a point outside the ball; rescaled inside",
            BoundaryClampWarning,
            stacklevel=2,
        )
        w[bad] *= (_CLAMP_NORM / np.sqrt(ns[bad]))[:, None]
    return w


def gyr(u, v, w):
    """Gyration gyr[u,v]w = -(u (+) v) (+) (u (+) (v (+) w))."""
    return add(-add(u, v), add(u, add(v, w)))


def gyr_matrix(u, v):
    """Orthogonal matrix of gyr[u,v], columns probed at basis vectors / 2."""
    n = u.shape[0]
    a = -add(u, v)
    probes = np.eye(n) * 0.5
    cols = add_batch(a, add_batch(u, add_batch(v, probes).copy()))
    return 2.0 * cols.T.copy()
