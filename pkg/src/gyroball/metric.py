"""Rapidity, the rapidity (Cayley-Klein) metric, the gyrometric, and two
independent distance oracles for cross-validation.

The oracles compute the same hyperbolic distance along entirely different
routes (arccosh form of the Beltrami-Klein distance; log cross-ratio along
the chord), so downstream users can validate the gyro-algebraic path.
"""

import numpy as np

from .exceptions import InternalConsistencyError
from .gyro import ball_point, sub
from .linalg import check_same_dim

_ATANH_CAP = 1.0 - 1e-15


def _atanh(x):
    # 0.5*ln((1+x)/(1-x)) with the argument capped just below 1 so that
    # near-boundary inputs stay finite and monotone.
    x = min(x, _ATANH_CAP)
    return 0.5 * np.log((1.0 + x) / (1.0 - x))


def rapidity(v):
    """atanh(|v|), the hyperbolic speed; zero iff v = 0."""
    v = ball_point(v)
    return _atanh(float(np.sqrt(v @ v)))


def gyrometric(u, v):
    """|(-u) (+) v|, the gyrometric distance."""
    d = sub(u, v)
    return float(np.sqrt(d @ d))


def dist(u, v):
    """atanh(|(-u) (+) v|), the rapidity (Cayley-Klein) metric."""
    return _atanh(gyrometric(u, v))


def dist_oracle_cosh(u, v):
    """Beltrami-Klein distance arccosh((1 - <u,v>) / sqrt((1-|u|^2)(1-|v|^2)))."""
    u, v = ball_point(u), ball_point(v)
    check_same_dim(u, v)
    arg = (1.0 - u @ v) / np.sqrt((1.0 - u @ u) * (1.0 - v @ v))
    return float(np.arccosh(max(arg, 1.0)))


def dist_oracle_crossratio(u, v):
    """Log cross-ratio distance along the chord through u and v.

    Intersects the Euclidean line through u and v with the unit sphere; with
    a the root beyond u and b the root beyond v, returns
    (1/2) ln((|a-v| |u-b|) / (|a-u| |v-b|)).
    """
    u, v = ball_point(u), ball_point(v)
    check_same_dim(u, v)
    d = v - u
    dd = float(d @ d)
    if dd == 0.0:
        return 0.0
    # |u + t d| = 1: quadratic in the line parameter t (u at 0, v at 1).
    ud = float(u @ d)
    disc = ud * ud - dd * (float(u @ u) - 1.0)
    if disc <= 0.0:
        raise InternalConsistencyError("chord-sphere intersection has no real roots")
    sq = np.sqrt(disc)
    t_a = (-ud - sq) / dd  # < 0, on u's side
    t_b = (-ud + sq) / dd  # > 1, on v's side
    a = u + t_a * d
    b = u + t_b * d
    ratio = (np.linalg.norm(a - v) * np.linalg.norm(u - b)) / (
        np.linalg.norm(a - u) * np.linalg.norm(v - b)
    )
    return float(0.5 * np.log(ratio))
