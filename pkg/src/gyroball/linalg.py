"""Dimension-generic dense vector/matrix helpers and seeded random sampling.

Vectors and matrices are plain float64 numpy arrays; the functions here add
the validation and seeded sampling the rest of the library relies on.
"""

from dataclasses import dataclass

import numpy as np

from .exceptions import DimensionError, InternalConsistencyError


@dataclass(frozen=True)
class Tolerance:
    """Relative/absolute tolerance pair for approximate comparisons."""

    rel: float = 1e-9
    abs: float = 1e-12

    def __post_init__(self):
        if self.rel < 0 or self.abs < 0 or (self.rel == 0 and self.abs == 0):
            raise ValueError("tolerance must be nonnegative and not both zero")

    def close(self, x, y):
        """|x - y| <= abs + rel * max(|x|, |y|), elementwise for arrays."""
        return bool(
            np.all(np.abs(x - y) <= self.abs + self.rel * np.maximum(np.abs(x), np.abs(y)))
        )


DEFAULT_TOL = Tolerance()


def as_vector(x):
    """Coerce to a finite 1-D float64 vector."""
    v = np.ascontiguousarray(x, dtype=np.float64)
    if v.ndim != 1 or v.shape[0] < 1:
        raise DimensionError(f"expected a 1-D vector, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError("vector entries must be finite")
    return v


def as_matrix(x):
    """Coerce to a finite 2-D float64 matrix."""
    m = np.ascontiguousarray(x, dtype=np.float64)
    if m.ndim != 2:
        raise DimensionError(f"expected a 2-D matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return m


def check_same_dim(u, v):
    if u.shape[0] != v.shape[0]:
        raise DimensionError(f"dimension mismatch: {u.shape[0]} vs {v.shape[0]}")


def inner(u, v):
    """Euclidean inner product."""
    u, v = as_vector(u), as_vector(v)
    check_same_dim(u, v)
    return float(u @ v)


def norm(v):
    """Euclidean norm."""
    v = as_vector(v)
    return float(np.sqrt(v @ v))


def mat_apply(m, v):
    """Matrix-vector product."""
    m, v = as_matrix(m), as_vector(v)
    if m.shape[1] != v.shape[0]:
        raise DimensionError(f"matrix columns {m.shape[1]} vs vector dim {v.shape[0]}")
    return m @ v


def mat_compose(a, b):
    """Matrix product a @ b."""
    a, b = as_matrix(a), as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise DimensionError(f"inner dimensions {a.shape[1]} vs {b.shape[0]}")
    return a @ b


def transpose(m):
    return np.ascontiguousarray(as_matrix(m).T)


def is_orthogonal(m, tol=DEFAULT_TOL):
    """Whether max|m.T m - I| <= tol.abs + tol.rel."""
    m = as_matrix(m)
    if m.shape[0] != m.shape[1]:
        return False
    resid = np.max(np.abs(m.T @ m - np.eye(m.shape[0])))
    return bool(resid <= tol.abs + tol.rel)


def as_orthogonal(m, tol=DEFAULT_TOL):
    """Coerce to a square orthogonal matrix, raising ValueError otherwise."""
    m = as_matrix(m)
    if m.shape[0] != m.shape[1]:
        raise DimensionError(f"orthogonal matrix must be square, got {m.shape}")
    if not is_orthogonal(m, tol):
        raise ValueError("matrix is not orthogonal within tolerance")
    return m


def sample_orthogonal(rng, n):
    """Draw an orthogonal matrix from a Generator (QR of a Gaussian matrix)."""
    for _ in range(8):
        g = rng.standard_normal((n, n))
        q, r = np.linalg.qr(g)
        d = np.diag(r)
        if np.all(np.abs(d) > 1e-12):
            # Fixing the signs of R's diagonal gives Haar-like coverage.
            return np.ascontiguousarray(q * np.sign(d))
    raise InternalConsistencyError("repeatedly drew numerically singular Gaussian matrices")


def random_orthogonal(n, seed):
    """Seeded orthogonal matrix; deterministic for a given seed."""
    if n < 1:
        raise DimensionError("n must be >= 1")
    return sample_orthogonal(np.random.default_rng(seed), n)


def sample_ball_point(rng, n, rmax):
    """Draw a vector with norm <= rmax: uniform direction, uniform radius."""
    d = rng.standard_normal(n)
    nd = np.sqrt(d @ d)
    while nd < 1e-12:
        d = rng.standard_normal(n)
        nd = np.sqrt(d @ d)
    return (rng.uniform(0.0, rmax) / nd) * d


def random_ball_point(n, rmax, seed):
    """Seeded point of the ball with norm <= rmax; deterministic per seed."""
    if n < 1:
        raise DimensionError("n must be >= 1")
    if not 0.0 < rmax < 1.0:
        raise ValueError("rmax must lie in (0, 1)")
    return sample_ball_point(np.random.default_rng(seed), n, rmax)
