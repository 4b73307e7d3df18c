"""The isometry group of the ball under the rapidity metric.

Every isometry is stored in its canonical form: a translation part u (a ball
point) and a rotation part tau (an orthogonal matrix), acting as
w -> u (+) tau(w). Composition follows the gyrosemidirect-product law, so
`Isometry` with `compose` IS the group of pairs.
"""

from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .exceptions import DimensionError, NotAnIsometryError
from .gyro import add, ball_point, gyr_matrix
from .linalg import DEFAULT_TOL, Tolerance, as_orthogonal, is_orthogonal, sample_ball_point

# Construction gate for the rotation part; deliberately looser than DEFAULT_TOL
# so that long chains of near-boundary compositions keep the type invariant.
_ORTHO_GATE = Tolerance(rel=1e-6, abs=1e-9)


@dataclass(frozen=True)
class Isometry:
    """Canonical pair (u, tau) for the map w -> u (+) tau(w)."""

    u: np.ndarray
    tau: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "u", ball_point(self.u))
        object.__setattr__(self, "tau", as_orthogonal(self.tau, _ORTHO_GATE))
        if self.tau.shape[0] != self.u.shape[0]:
            raise DimensionError("translation and rotation dimensions differ")

    @property
    def dim(self):
        return self.u.shape[0]

    def close_to(self, other, tol=DEFAULT_TOL):
        """Canonical-form equality within tolerance (field-wise)."""
        return tol.close(self.u, other.u) and tol.close(self.tau, other.tau)


def identity(n):
    """The identity isometry (0, I)."""
    return Isometry(np.zeros(n), np.eye(n))


def apply(f, w):
    """Evaluate f at w: f.u (+) f.tau @ w."""
    w = ball_point(w)
    if w.shape[0] != f.dim:
        raise DimensionError(f"isometry dim {f.dim} vs point dim {w.shape[0]}")
    return add(f.u, f.tau @ w)


def compose(f, g):
    """Group law: (u, a)(v, b) = (u (+) a v, gyr[u, a v] a b)."""
    if f.dim != g.dim:
        raise DimensionError(f"isometry dims differ: {f.dim} vs {g.dim}")
    av = np.ascontiguousarray(f.tau @ g.u)
    return Isometry(add(f.u, av), kernels.gyr_matrix(f.u, av) @ f.tau @ g.tau)


def invert(f):
    """Group inverse (tau^T (-u), tau^T), exact up to rounding."""
    return Isometry(f.tau.T @ (-f.u), np.ascontiguousarray(f.tau.T))


def transport(u, v):
    """An isometry carrying u to v (homogeneity): left translations by v, -u."""
    u, v = ball_point(u), ball_point(v)
    return Isometry(add(v, -u), gyr_matrix(v, -u))


def point_reflection(v):
    """The involutive isometry with unique fixed point v: (v (+) v, -I)."""
    v = ball_point(v)
    return Isometry(add(v, v), -np.eye(v.shape[0]))


def decompose(psi, n, tol=DEFAULT_TOL, probes=8, probe_seed=0):
    """Recover the canonical pair of a black-box isometry of dimension n.

    The translation part is psi(0); the rotation columns are read off from
    psi at the half basis vectors. Validation re-evaluates psi at `probes`
    random points and raises NotAnIsometryError on residual failure.
    """
    u = ball_point(psi(np.zeros(n)))
    tau = np.empty((n, n))
    for i in range(n):
        e = np.zeros(n)
        e[i] = 0.5
        tau[:, i] = 2.0 * add(-u, ball_point(psi(e)))
    if not is_orthogonal(tau, tol):
        resid = float(np.max(np.abs(tau.T @ tau - np.eye(n))))
        raise NotAnIsometryError(
            f"recovered rotation part is not orthogonal (residual {resid:.3g})", resid
        )
    f = Isometry(u, tau)
    rng = np.random.default_rng(probe_seed)
    max_resid = 0.0
    for _ in range(probes):
        w = sample_ball_point(rng, n, 0.9)
        resid = float(np.max(np.abs(apply(f, w) - ball_point(psi(w)))))
        max_resid = max(max_resid, resid)
    if max_resid > tol.abs + tol.rel:
        raise NotAnIsometryError(
            f"probe residual {max_resid:.3g} exceeds tolerance", max_resid
        )
    return f


def fit_from_probes(pairs, tol=DEFAULT_TOL):
    """Recover an isometry from (input, output) probe pairs.

    One probe input must be the origin (it pins the translation part); the
    remaining inputs must span the space. Returns (Isometry, max residual
    over all pairs); raises NotAnIsometryError when the pairs are not
    consistent with any single isometry, ValueError when they underdetermine
    one.
    """
    origin = [(x, y) for x, y in pairs if np.linalg.norm(x) < 1e-12]
    if not origin:
        raise ValueError("probe set must include the origin as an input")
    u = ball_point(origin[0][1])
    n = u.shape[0]
    rest = [(ball_point(x), ball_point(y)) for x, y in pairs if np.linalg.norm(x) >= 1e-12]
    if len(rest) < n:
        raise ValueError(f"need at least {n} nonzero probe inputs, got {len(rest)}")
    xs = np.column_stack([x for x, _ in rest])
    zs = np.column_stack([add(-u, y) for _, y in rest])
    if np.linalg.matrix_rank(xs) < n:
        raise ValueError("probe inputs do not span the space")
    tau = zs @ np.linalg.pinv(xs)
    if not is_orthogonal(tau, tol):
        resid = float(np.max(np.abs(tau.T @ tau - np.eye(n))))
        raise NotAnIsometryError(
            f"fitted rotation part is not orthogonal (residual {resid:.3g})", resid
        )
    f = Isometry(u, tau)
    max_resid = 0.0
    for x, y in pairs:
        max_resid = max(max_resid, float(np.max(np.abs(apply(f, np.asarray(x, float)) - y))))
    if max_resid > tol.abs + tol.rel:
        raise NotAnIsometryError(
            f"probe residual {max_resid:.3g} exceeds tolerance", max_resid
        )
    return f, max_resid
