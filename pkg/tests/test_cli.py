import json

import numpy as np
import pytest

from gyroball import cli
from gyroball import isometry as iso
from gyroball.linalg import sample_ball_point, sample_orthogonal


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    assert out.endswith("\n")
    return code, json.loads(out)


def test_add(capsys):
    code, data = run_json(capsys, "add", "[0,0]", "[0.3,0.4]")
    assert code == 0
    assert data == [0.3, 0.4]


def test_dist(capsys):
    code, data = run_json(capsys, "dist", "[0.5,0]", "[0.8,0]")
    assert code == 0
    assert data == pytest.approx(np.arctanh(0.5))


def test_rapidity(capsys):
    code, data = run_json(capsys, "rapidity", "[0,0,0]")
    assert code == 0
    assert data == 0.0


def test_gyr(capsys):
    code, data = run_json(capsys, "gyr", "[0,0]", "[0.3,0.1]", "[0.2,0.2]")
    assert code == 0
    assert data == pytest.approx([0.2, 0.2])


def test_exit_code_malformed_json(capsys):
    code, _ = run(capsys, "add", "[0.5,0", "[0,0]")
    assert code == 2


def test_exit_code_out_of_ball(capsys):
    code, _ = run(capsys, "add", "[0.5,0]", "[1.0,0]")
    assert code == 3


def test_exit_code_dimension_mismatch(capsys):
    code, _ = run(capsys, "add", "[0.5,0]", "[0.1,0.2,0.3]")
    assert code == 4


def test_exit_code_non_orthogonal_tau(capsys):
    bad = json.dumps({"u": [0.1, 0], "tau": [[1, 1], [0, 1]]})
    code, _ = run(capsys, "invert", bad)
    assert code == 5


def test_compose_translations(capsys):
    f = json.dumps({"u": [0.5, 0], "tau": [[1, 0], [0, 1]]})
    g = json.dumps({"u": [0.3, 0], "tau": [[1, 0], [0, 1]]})
    code, data = run_json(capsys, "compose", f, g)
    assert code == 0
    assert data["u"] == pytest.approx([0.8 / 1.15, 0.0])
    assert np.allclose(data["tau"], np.eye(2))  # collinear: identity gyration


def test_invert_roundtrip(capsys):
    rng = np.random.default_rng(0)
    f = iso.Isometry(sample_ball_point(rng, 3, 0.9), sample_orthogonal(rng, 3))
    fj = json.dumps({"u": f.u.tolist(), "tau": f.tau.tolist()})
    code, finv = run_json(capsys, "invert", fj)
    assert code == 0
    code, ident = run_json(capsys, "compose", fj, json.dumps(finv))
    assert code == 0
    assert np.allclose(ident["u"], 0.0, atol=1e-12)
    assert np.allclose(ident["tau"], np.eye(3), atol=1e-12)


def test_reflect_origin(capsys):
    code, data = run_json(capsys, "reflect", "[0,0]")
    assert code == 0
    assert data["u"] == [0.0, 0.0]
    assert np.allclose(data["tau"], -np.eye(2))


def test_transport(capsys):
    code, data = run_json(capsys, "transport", "[0,0,0]", "[0.2,0.1,0]")
    assert code == 0
    assert data["u"] == pytest.approx([0.2, 0.1, 0])
    assert np.allclose(data["tau"], np.eye(3))


def test_decompose_probe_pairs(capsys, tmp_path):
    rng = np.random.default_rng(1)
    f = iso.Isometry(sample_ball_point(rng, 2, 0.8), sample_orthogonal(rng, 2))
    xs = [np.zeros(2)] + [sample_ball_point(rng, 2, 0.8) for _ in range(4)]
    pairs = [[x.tolist(), iso.apply(f, x).tolist()] for x in xs]
    probe_file = tmp_path / "probes.json"
    probe_file.write_text(json.dumps(pairs))
    code, data = run_json(capsys, "decompose", f"@{probe_file}")
    assert code == 0
    assert np.allclose(data["u"], f.u)
    assert np.allclose(data["tau"], f.tau)
    assert data["max_probe_residual"] <= 1e-9


def test_decompose_rejects_non_isometry(capsys):
    pairs = [[[0, 0], [0, 0]], [[0.5, 0], [0.25, 0]], [[0, 0.5], [0, 0.25]],
             [[0.2, 0.2], [0.1, 0.1]]]
    code, _ = run(capsys, "decompose", json.dumps(pairs))
    assert code == 6


def test_check_report_and_determinism(capsys):
    args = ["check", "all", "-n", "2", "--trials", "50", "--seed", "42"]
    code1, out1 = run(capsys, *args)
    code2, out2 = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2  # byte-identical reports for identical seed/flags
    report = json.loads(out1)
    assert report["passed"] is True
    assert report["max_residual"] <= 1e-9
    assert set(report) == {"suite", "trials", "dimension", "max_residual", "passed", "seed"}


def test_check_unknown_suite(capsys):
    code, _ = run(capsys, "check", "nope")
    assert code == 2


def test_check_failure_exits_nonzero(capsys):
    # an absurdly tight tolerance cannot pass; exit code must signal failure
    code, out = run(capsys, "check", "gyrogroup-axioms", "--trials", "20",
                    "--tol", "1e-18", "--ineq-slack", "1e-20")
    assert code == 1
    assert json.loads(out)["passed"] is False


def test_vector_at_file(capsys, tmp_path):
    vf = tmp_path / "v.json"
    vf.write_text("[0.3, 0.4]")
    code, data = run_json(capsys, "add", "[0,0]", f"@{vf}")
    assert code == 0
    assert data == [0.3, 0.4]
