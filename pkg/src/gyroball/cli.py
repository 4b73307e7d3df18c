"""gyroball command line: every operation as a JSON-in / JSON-out subcommand.

Grammar: gyroball <command> [args] [--tol T] [--seed S] [--rmax R]
Data arguments are JSON literals on argv, or @file.json to read from a file.
One JSON document per invocation on stdout, newline-terminated.

Exit codes: 0 success (and, for `check`, suite passed); 1 suite failed;
2 malformed input or unknown suite; 3 point outside the ball; 4 dimension
mismatch; 5 non-orthogonal rotation part; 6 probe pairs are not an isometry.
"""

import argparse
import json
import sys

import numpy as np

from . import isometry as iso
from . import metric
from .checks import run_suite
from .exceptions import DimensionError, NotAnIsometryError, OutOfBallError
from .gyro import add, gyr_apply
from .linalg import Tolerance

EXIT_BAD_INPUT = 2
EXIT_OUT_OF_BALL = 3
EXIT_DIMENSION = 4
EXIT_NOT_ORTHOGONAL = 5
EXIT_NOT_ISOMETRY = 6


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _load_json(arg):
    try:
        if arg.startswith("@"):
            with open(arg[1:], encoding="utf-8") as fh:
                return json.load(fh)
        return json.loads(arg)
    except (json.JSONDecodeError, OSError) as exc:
        raise CliError(f"malformed JSON argument: {exc}", EXIT_BAD_INPUT) from exc


def _vector(arg):
    data = _load_json(arg)
    if not isinstance(data, list) or not all(isinstance(x, (int, float)) for x in data):
        raise CliError("expected a JSON array of numbers", EXIT_BAD_INPUT)
    return np.asarray(data, dtype=np.float64)


def _isometry(arg):
    data = _load_json(arg)
    if not isinstance(data, dict) or "u" not in data or "tau" not in data:
        raise CliError('expected a JSON object {"u": [...], "tau": [[...]]}', EXIT_BAD_INPUT)
    try:
        return iso.Isometry(np.asarray(data["u"], float), np.asarray(data["tau"], float))
    except ValueError as exc:
        if "orthogonal" in str(exc):
            raise CliError(str(exc), EXIT_NOT_ORTHOGONAL) from exc
        raise CliError(str(exc), EXIT_BAD_INPUT) from exc


def _jsonable(x):
    if isinstance(x, np.ndarray):
        return x.tolist()
    if isinstance(x, (np.floating, np.integer)):
        return x.item()
    return x


def _iso_json(f):
    return {"u": f.u.tolist(), "tau": f.tau.tolist()}


def _emit(obj):
    sys.stdout.write(json.dumps(_jsonable(obj)) + "\n")


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=1e-9,
                        help="tolerance for approximate comparisons")
    common.add_argument("--seed", type=int, default=0, help="seed for random sampling")
    common.add_argument("--rmax", type=float, default=0.95,
                        help="sampling radius cap in (0, 1)")

    p = argparse.ArgumentParser(prog="gyroball", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("add", parents=[common], help="Einstein addition u (+) v")
    sp.add_argument("u")
    sp.add_argument("v")
    sp = sub.add_parser("gyr", parents=[common], help="gyration gyr[u,v]w")
    sp.add_argument("u")
    sp.add_argument("v")
    sp.add_argument("w")
    sp = sub.add_parser("dist", parents=[common], help="rapidity metric d(u, v)")
    sp.add_argument("u")
    sp.add_argument("v")
    sp = sub.add_parser("rapidity", parents=[common], help="rapidity atanh(|v|)")
    sp.add_argument("v")
    sp = sub.add_parser("compose", parents=[common], help="compose two isometries")
    sp.add_argument("f")
    sp.add_argument("g")
    sp = sub.add_parser("invert", parents=[common], help="invert an isometry")
    sp.add_argument("f")
    sp = sub.add_parser("decompose", parents=[common],
                        help="fit an isometry to (input, output) probe pairs")
    sp.add_argument("probes", help="JSON array of [input, output] vector pairs; "
                                   "inputs must include the origin and span the space")
    sp = sub.add_parser("reflect", parents=[common], help="point reflection at v")
    sp.add_argument("v")
    sp = sub.add_parser("transport", parents=[common], help="isometry carrying u to v")
    sp.add_argument("u")
    sp.add_argument("v")
    sp = sub.add_parser("check", parents=[common], help="run a randomized property suite")
    sp.add_argument("suite")
    sp.add_argument("-n", "--dimension", type=int, default=3)
    sp.add_argument("--trials", type=int, default=1000)
    sp.add_argument("--ineq-slack", type=float, default=1e-12,
                    help="slack allowed on one-sided inequality checks")
    return p


def _run(args):
    cmd = args.command
    if cmd == "add":
        _emit(add(_vector(args.u), _vector(args.v)))
    elif cmd == "gyr":
        _emit(gyr_apply(_vector(args.u), _vector(args.v), _vector(args.w)))
    elif cmd == "dist":
        _emit(metric.dist(_vector(args.u), _vector(args.v)))
    elif cmd == "rapidity":
        _emit(metric.rapidity(_vector(args.v)))
    elif cmd == "compose":
        _emit(_iso_json(iso.compose(_isometry(args.f), _isometry(args.g))))
    elif cmd == "invert":
        _emit(_iso_json(iso.invert(_isometry(args.f))))
    elif cmd == "decompose":
        pairs = _load_json(args.probes)
        if not isinstance(pairs, list) or not all(
            isinstance(p, list) and len(p) == 2 for p in pairs
        ):
            raise CliError("expected a JSON array of [input, output] pairs", EXIT_BAD_INPUT)
        tol = Tolerance(rel=args.tol, abs=args.tol * 1e-3)
        try:
            f, resid = iso.fit_from_probes(
                [(np.asarray(x, float), np.asarray(y, float)) for x, y in pairs], tol
            )
        except ValueError as exc:
            raise CliError(str(exc), EXIT_BAD_INPUT) from exc
        out = _iso_json(f)
        out["max_probe_residual"] = resid
        _emit(out)
    elif cmd == "reflect":
        _emit(_iso_json(iso.point_reflection(_vector(args.v))))
    elif cmd == "transport":
        _emit(_iso_json(iso.transport(_vector(args.u), _vector(args.v))))
    elif cmd == "check":
        if not (0.0 < args.rmax < 1.0):
            raise CliError("--rmax must lie in (0, 1)", EXIT_BAD_INPUT)
        try:
            report = run_suite(
                args.suite, args.dimension, args.trials, args.rmax,
                args.seed, tol=args.tol, ineq_slack=args.ineq_slack,
            )
        except KeyError:
            raise CliError(f"unknown suite: {args.suite}", EXIT_BAD_INPUT) from None
        _emit(report.to_dict())
        return 0 if report.passed else 1
    return 0


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _run(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except NotAnIsometryError as exc:
        print(f"error: not an isometry: {exc}", file=sys.stderr)
        return EXIT_NOT_ISOMETRY
    except OutOfBallError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_OUT_OF_BALL
    except DimensionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DIMENSION


if __name__ == "__main__":
    sys.exit(main())
