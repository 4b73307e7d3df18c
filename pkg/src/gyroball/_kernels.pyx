# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot kernels: Einstein addition, gyrations.

Same surface as `gyroball._kernels_py`; inputs are assumed to be float64
C-contiguous vectors of equal dimension strictly inside the unit ball.
"""

import warnings

import numpy as np

from .exceptions import BoundaryClampWarning

from libc.math cimport sqrt

BACKEND = "compiled"

cdef double CLAMP_NORM = 1.0 - 1e-12


cdef inline double _dot(const double[::1] a, const double[::1] b) nogil:
    cdef Py_ssize_t i
    cdef double s = 0.0
    for i in range(a.shape[0]):
        s += a[i] * b[i]
    return s


cdef int _add_into(const double[::1] u, const double[::1] v,
                   double[::1] out) nogil:
    # Returns 1 when the result had to be clamped back inside the ball.
    cdef Py_ssize_t i, n = u.shape[0]
    cdef double uv = _dot(u, v)
    cdef double g = 1.0 / sqrt(1.0 - _dot(u, u))
    cdef double f = 1.0 / (1.0 + uv)
    cdef double cu = 1.0 + (g / (1.0 + g)) * uv
    cdef double ns = 0.0, scale
    for i in range(n):
        out[i] = f * (cu * u[i] + v[i] / g)
        ns += out[i] * out[i]
    if ns >= 1.0:
        scale = CLAMP_NORM / sqrt(ns)
        for i in range(n):
            out[i] *= scale
        return 1
    return 0


cdef void _warn_clamp():
    warnings.warn(
        "rounding produced a point outside the ball; rescaled inside",
        BoundaryClampWarning,
        stacklevel=3,
    )


def gamma(const double[::1] v):
    """Lorentz factor 1/sqrt(1 - |v|^2), c = 1."""
    return 1.0 / sqrt(1.0 - _dot(v, v))


def add(const double[::1] u, const double[::1] v):
    """Einstein velocity addition u (+) v."""
    out = np.empty(u.shape[0])
    if _add_into(u, v, out):
        _warn_clamp()
    return out


def add_batch(const double[::1] u, const double[:, ::1] vs):
    """Einstein addition of a single u against a (k, n) stack of vectors."""
    cdef Py_ssize_t k
    out = np.empty((vs.shape[0], vs.shape[1]))
    cdef double[:, ::1] mo = out
    cdef int clamped = 0
    for k in range(vs.shape[0]):
        clamped |= _add_into(u, vs[k], mo[k])
    if clamped:
        _warn_clamp()
    return out


def gyr(const double[::1] u, const double[::1] v, const double[::1] w):
    """Gyration gyr[u,v]w = -(u (+) v) (+) (u (+) (v (+) w))."""
    cdef Py_ssize_t i, n = u.shape[0]
    a = np.empty(n)
    t1 = np.empty(n)
    t2 = np.empty(n)
    out = np.empty(n)
    cdef double[::1] ma = a, m1 = t1, m2 = t2, mo = out
    cdef int clamped = 0
    clamped |= _add_into(u, v, ma)
    for i in range(n):
        ma[i] = -ma[i]
    clamped |= _add_into(v, w, m1)
    clamped |= _add_into(u, m1, m2)
    clamped |= _add_into(ma, m2, mo)
    if clamped:
        _warn_clamp()
    return out


def gyr_matrix(const double[::1] u, const double[::1] v):
    """Orthogonal matrix of gyr[u,v], columns probed at basis vectors / 2."""
    cdef Py_ssize_t i, j, n = u.shape[0]
    a = np.empty(n)
    e = np.zeros(n)
    t1 = np.empty(n)
    t2 = np.empty(n)
    col = np.empty(n)
    mat = np.empty((n, n))
    cdef double[::1] ma = a, me = e, m1 = t1, m2 = t2, mc = col
    cdef double[:, ::1] mm = mat
    cdef int clamped = 0
    clamped |= _add_into(u, v, ma)
    for i in range(n):
        ma[i] = -ma[i]
    for j in range(n):
        me[j] = 0.5
        clamped |= _add_into(v, me, m1)
        clamped |= _add_into(u, m1, m2)
        clamped |= _add_into(ma, m2, mc)
        for i in range(n):
            mm[i, j] = 2.0 * mc[i]
        me[j] = 0.0
    if clamped:
        _warn_clamp()
    return mat
