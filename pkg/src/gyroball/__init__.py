"""Einstein gyrogroup on the open unit ball and its isometry group.

Einstein velocity addition, gyrations, the rapidity (Cayley-Klein) metric,
Lorentz boosts, and the full isometry group in canonical (translation,
rotation) form, with seeded property suites for every algebraic identity.
"""

from ._backend import backend_name

# `gyroball.boost` stays bound to the submodule; its constructor is reachable
# as gyroball.boost.boost.
from .boost import BoostMatrix, boost_compose_residual, thomas_angle, thomas_rotation
from .checks import SUITES, CheckReport, run_suite
from .exceptions import (
    BoundaryClampWarning,
    DimensionError,
    GyroballError,
    InternalConsistencyError,
    NotAnIsometryError,
    OutOfBallError,
)
from .gyro import add, ball_point, gamma, gyr_apply, gyr_matrix, neg, sub
from .isometry import (
    Isometry,
    apply,
    compose,
    decompose,
    fit_from_probes,
    identity,
    invert,
    point_reflection,
    transport,
)
from .linalg import (
    Tolerance,
    inner,
    is_orthogonal,
    mat_apply,
    mat_compose,
    norm,
    random_ball_point,
    random_orthogonal,
    transpose,
)
from .metric import dist, dist_oracle_cosh, dist_oracle_crossratio, gyrometric, rapidity

__version__ = "0.1.0"
