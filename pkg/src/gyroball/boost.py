"""Lorentz boosts on (t, x) spacetime coordinates, c = 1.

A boost is the symmetric Minkowski-orthogonal matrix parametrized by a ball
velocity. The composition of two boosts is a boosted rotation; the spatial
rotation block is exactly the gyration of the two velocities (the Thomas
rotation), which `boost_compose_residual` verifies numerically.
"""

from dataclasses import dataclass

import numpy as np

from .gyro import add, ball_point, gamma, gyr_matrix
from .linalg import check_same_dim


@dataclass(frozen=True)
class BoostMatrix:
    """(n+1)x(n+1) symmetric Lorentz boost and its generating velocity."""

    m: np.ndarray
    v: np.ndarray


def minkowski_form(n):
    """diag(1, -1, ..., -1) on (t, x) with n spatial dimensions."""
    eta = -np.eye(n + 1)
    eta[0, 0] = 1.0
    return eta


def boost(v):
    """Standard symmetric boost: [[g, g v^T], [g v, I + g^2/(1+g) v v^T]]."""
    v = ball_point(v)
    n = v.shape[0]
    g = gamma(v)
    m = np.empty((n + 1, n + 1))
    m[0, 0] = g
    m[0, 1:] = g * v
    m[1:, 0] = g * v
    m[1:, 1:] = np.eye(n) + (g * g / (1.0 + g)) * np.outer(v, v)
    return BoostMatrix(m, v)


def spacetime_rotation(rot):
    """Embed a spatial rotation as blockdiag(1, rot): time is untouched."""
    n = rot.shape[0]
    m = np.zeros((n + 1, n + 1))
    m[0, 0] = 1.0
    m[1:, 1:] = rot
    return m


def boost_compose_residual(u, v):
    """Max-norm defect of boost(u) boost(v) = boost(u (+) v) Gyr[u, v]."""
    u, v = ball_point(u), ball_point(v)
    check_same_dim(u, v)
    lhs = boost(u).m @ boost(v).m
    rhs = boost(add(u, v)).m @ spacetime_rotation(gyr_matrix(u, v))
    return float(np.max(np.abs(lhs - rhs)))


def thomas_rotation(u, v):
    """The spatial rotation gyr[u,v] closing the boost composition law."""
    return gyr_matrix(u, v)


def thomas_angle(u, v):
    """Rotation angle of the Thomas rotation for planar (n = 2) velocities."""
    m = gyr_matrix(u, v)
    if m.shape != (2, 2):
        raise ValueError("rotation angle is defined for n = 2 only")
    return float(np.arctan2(m[1, 0], m[0, 0]))


def minkowski_residual(b):
    """Max-norm defect of m^T eta m = eta for a BoostMatrix."""
    eta = minkowski_form(b.v.shape[0])
    return float(np.max(np.abs(b.m.T @ eta @ b.m - eta)))
