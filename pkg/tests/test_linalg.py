import numpy as np
import pytest

from gyroball import linalg
from gyroball.exceptions import DimensionError


def test_inner_examples():
    assert linalg.inner([1, 0], [0, 1]) == 0.0
    assert linalg.inner([0.6, 0], [0.6, 0]) == pytest.approx(0.36)
    assert linalg.inner([0.3, 0.4], [0.5, 0.2]) == pytest.approx(0.23)


def test_inner_dimension_mismatch():
    with pytest.raises(DimensionError):
        linalg.inner([1, 0], [1, 0, 0])


def test_norm_examples():
    assert linalg.norm([0, 0, 0]) == 0.0
    assert linalg.norm([0.6, 0.8]) == pytest.approx(1.0)
    assert linalg.norm([0.3, 0.4]) == pytest.approx(0.5)


def test_mat_apply():
    assert np.allclose(linalg.mat_apply(np.eye(2), [0.3, 0.4]), [0.3, 0.4])
    rot90 = [[0, -1], [1, 0]]
    assert np.allclose(linalg.mat_apply(rot90, [1, 0]), [0, 1])
    assert np.allclose(linalg.mat_apply([[2, 0], [0, 3]], [1, 1]), [2, 3])
    with pytest.raises(DimensionError):
        linalg.mat_apply(np.eye(2), [1, 2, 3])


def test_mat_compose_and_transpose():
    m = np.array([[1.0, 2.0], [3.0, 4.0]])
    assert np.allclose(linalg.mat_compose(np.eye(2), m), m)
    assert np.allclose(linalg.transpose(linalg.transpose(m)), m)
    with pytest.raises(DimensionError):
        linalg.mat_compose(m, np.ones((3, 2)))


def test_is_orthogonal_rotation():
    th = 0.7
    rot = [[np.cos(th), -np.sin(th)], [np.sin(th), np.cos(th)]]
    assert linalg.is_orthogonal(rot)
    assert not linalg.is_orthogonal([[1.0, 1.0], [0.0, 1.0]])


@pytest.mark.parametrize("seed", [0, 1, 17])
def test_random_orthogonal(seed):
    q = linalg.random_orthogonal(3, seed)
    assert linalg.is_orthogonal(q)
    assert np.allclose(q, linalg.random_orthogonal(3, seed))
    assert abs(abs(np.linalg.det(linalg.random_orthogonal(4, seed))) - 1.0) < 1e-9


def test_random_ball_point():
    v = linalg.random_ball_point(3, 0.99, 5)
    assert linalg.norm(v) <= 0.99
    assert np.allclose(linalg.random_ball_point(2, 0.5, 5), linalg.random_ball_point(2, 0.5, 5))


def test_ball_point_mean_norm():
    # uniform radius in [0, rmax] has mean rmax / 2
    rng = np.random.default_rng(11)
    norms = [np.linalg.norm(linalg.sample_ball_point(rng, 3, 0.9)) for _ in range(10_000)]
    assert np.mean(norms) == pytest.approx(0.45, abs=0.01)


def test_orthogonal_preserves_norm():
    rng = np.random.default_rng(3)
    for n in (2, 3, 5):
        q = linalg.sample_orthogonal(rng, n)
        v = linalg.sample_ball_point(rng, n, 0.9)
        assert linalg.norm(q @ v) == pytest.approx(linalg.norm(v))


def test_tolerance_validation():
    with pytest.raises(ValueError):
        linalg.Tolerance(rel=0.0, abs=0.0)
    with pytest.raises(ValueError):
        linalg.Tolerance(rel=-1e-9)
    tol = linalg.Tolerance()
    assert tol.close(1.0, 1.0 + 1e-12)
    assert not tol.close(1.0, 1.0 + 1e-6)
