"""Compare the compiled and pure-Python kernel backends on the hot operations.

Usage: python benchmarks/bench_backends.py [--trials N] [--dim N]
The check suites are dominated by Einstein additions and gyrations on small
vectors, so those are what is timed here.
"""

import argparse
import time

import numpy as np

from gyroball import _kernels_py
from gyroball.linalg import sample_ball_point

try:
    from gyroball import _kernels
except ImportError:
    _kernels = None


def bench(kernels, us, vs, ws, reps):
    t0 = time.perf_counter()
    for _ in range(reps):
        for u, v in zip(us, vs):
            kernels.add(u, v)
    t_add = time.perf_counter() - t0
    t0 = time.perf_counter()
    for _ in range(reps):
        for u, v, w in zip(us, vs, ws):
            kernels.gyr(u, v, w)
    t_gyr = time.perf_counter() - t0
    t0 = time.perf_counter()
    for _ in range(reps):
        for u, v in zip(us, vs):
            kernels.gyr_matrix(u, v)
    t_mat = time.perf_counter() - t0
    return t_add, t_gyr, t_mat


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--trials", type=int, default=2000)
    ap.add_argument("--reps", type=int, default=5)
    ap.add_argument("--dim", type=int, default=3)
    args = ap.parse_args()

    rng = np.random.default_rng(0)
    us = [sample_ball_point(rng, args.dim, 0.95) for _ in range(args.trials)]
    vs = [sample_ball_point(rng, args.dim, 0.95) for _ in range(args.trials)]
    ws = [sample_ball_point(rng, args.dim, 0.95) for _ in range(args.trials)]

    backends = [("python", _kernels_py)]
    if _kernels is not None:
        backends.insert(0, ("compiled", _kernels))

    n_calls = args.trials * args.reps
    results = {}
    print(f"dim={args.dim}, {n_calls} calls per operation")
    for name, kern in backends:
        times = bench(kern, us, vs, ws, args.reps)
        results[name] = times
        for op, t in zip(("add", "gyr", "gyr_matrix"), times):
            print(f"  {name:8s} {op:10s} {1e6 * t / n_calls:8.2f} us/call")
    if len(results) == 2:
        for i, op in enumerate(("add", "gyr", "gyr_matrix")):
            speedup = results["python"][i] / results["compiled"][i]
            print(f"  speedup {op:10s} {speedup:6.1f}x")


if __name__ == "__main__":
    main()
