"""Einstein gyrogroup core: addition, Lorentz factor, gyrations.

Points of the gyrogroup are float64 vectors of norm strictly below 1;
`ball_point` is the validating constructor. The heavy lifting lives in the
kernel backend (compiled extension or numpy fallback).
"""

import numpy as np

from ._backend import kernels
from .exceptions import InternalConsistencyError, OutOfBallError
from .linalg import as_vector, check_same_dim


def ball_point(x):
    """Coerce to a vector strictly inside the unit ball."""
    v = as_vector(x)
    if v @ v >= 1.0:
        raise OutOfBallError(f"norm {np.sqrt(v @ v):.17g} >= 1: point outside the open ball")
    return v


def gamma(v):
    """Lorentz factor 1/sqrt(1 - |v|^2) (c = 1); >= 1 inside the ball."""
    return float(kernels.gamma(ball_point(v)))


def add(u, v):
    """Einstein velocity addition u (+) v; result stays inside the ball."""
    u, v = ball_point(u), ball_point(v)
    check_same_dim(u, v)
    return kernels.add(u, v)


def neg(v):
    """Gyrogroup inverse: entrywise negation."""
    return -ball_point(v)


def sub(u, v):
    """(-u) (+) v, the left-cancelling difference."""
    return add(-ball_point(u), v)


def gyr_apply(u, v, w):
    """Gyration gyr[u,v]w, via the gyrator identity; preserves the norm."""
    u, v, w = ball_point(u), ball_point(v), ball_point(w)
    check_same_dim(u, v)
    check_same_dim(u, w)
    return kernels.gyr(u, v, w)


def gyr_matrix(u, v):
    """The orthogonal matrix acting as gyr[u,v] on the whole ball."""
    u, v = ball_point(u), ball_point(v)
    check_same_dim(u, v)
    m = kernels.gyr_matrix(u, v)
    resid = np.max(np.abs(m.T @ m - np.eye(m.shape[0])))
    if resid > 1e-6:
        raise InternalConsistencyError(
            f"gyration matrix orthogonality residual {resid:.3g} exceeds 1e-6"
        )
    return m
