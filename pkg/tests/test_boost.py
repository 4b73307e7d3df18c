import numpy as np
import pytest

from gyroball import boost as bst
from gyroball.linalg import sample_ball_point


def test_boost_zero_is_identity():
    assert np.allclose(bst.boost(np.zeros(2)).m, np.eye(3))


def test_boost_gamma_entry():
    assert bst.boost(np.array([0.6, 0.0])).m[0, 0] == pytest.approx(1.25)


def test_boost_is_symmetric_and_minkowski():
    rng = np.random.default_rng(0)
    for n in (2, 3, 4):
        b = bst.boost(sample_ball_point(rng, n, 0.95))
        assert np.allclose(b.m, b.m.T)
        assert bst.minkowski_residual(b) <= 1e-9


def test_compose_residual_trivial():
    v = np.array([0.3, -0.4])
    assert bst.boost_compose_residual(np.zeros(2), v) <= 1e-12


def test_compose_residual_collinear_and_generic():
    assert bst.boost_compose_residual(np.array([0.5, 0.0]), np.array([0.3, 0.0])) <= 1e-9
    assert bst.boost_compose_residual(np.array([0.5, 0.0]), np.array([0.0, 0.5])) <= 1e-9


def test_compose_residual_random():
    rng = np.random.default_rng(1)
    for n in (2, 3):
        for _ in range(50):
            u = sample_ball_point(rng, n, 0.95)
            v = sample_ball_point(rng, n, 0.95)
            assert bst.boost_compose_residual(u, v) <= 1e-9


def test_thomas_rotation():
    u = np.array([0.5, 0.0])
    assert np.allclose(bst.thomas_rotation(u, u), np.eye(2))
    assert np.allclose(bst.thomas_rotation(u, np.array([0.3, 0.0])), np.eye(2))
    assert abs(bst.thomas_angle(u, np.array([0.0, 0.5]))) > 0.01


def test_thomas_angle_planar_only():
    with pytest.raises(ValueError):
        bst.thomas_angle(np.array([0.1, 0, 0]), np.array([0, 0.1, 0]))
