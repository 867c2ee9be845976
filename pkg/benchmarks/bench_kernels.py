#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python kernels.

Micro-benchmarks exercise the three kernel entry points on workloads shaped
like the verification campaign's inner loops (dense integer convolutions of
generating-function coefficient arrays, plus the million-step quadrature).
The end-to-end section times one campaign slice per backend in a
subprocess, selecting the backend with BERNKIT_PURE.

Usage: python3 benchmarks/bench_kernels.py [--skip-end-to-end]
"""

import argparse
import math
import os
import random
import subprocess
import sys
import time

from bernkit import _kernels_py

try:
    from bernkit import _ckernels
except ImportError:
    _ckernels = None


def _time(fn, *args, min_seconds=0.3):
    fn(*args)  # warm up
    reps = 1
    while True:
        start = time.perf_counter()
        for _ in range(reps):
            fn(*args)
        elapsed = time.perf_counter() - start
        if elapsed >= min_seconds:
            return elapsed / reps
        reps = max(reps * 2, int(reps * min_seconds / max(elapsed, 1e-9)))


def workloads():
    rng = random.Random(2024)
    small_a = [math.comb(24, k) * rng.choice((-1, 1)) for k in range(25)]
    small_b = [math.comb(24, k) * rng.choice((-1, 1)) for k in range(25)]
    big_a = [rng.randint(-(10**40), 10**40) for _ in range(25)]
    big_b = [rng.randint(-(10**40), 10**40) for _ in range(25)]
    grid_a = [[rng.randint(-(10**6), 10**6) for _ in range(13)] for _ in range(13)]
    grid_b = [[rng.randint(-(10**6), 10**6) for _ in range(13)] for _ in range(13)]
    return [
        ("conv1 deg-24 machine ints", "conv1", (small_a, small_b)),
        ("conv1 deg-24 40-digit ints", "conv1", (big_a, big_b)),
        ("conv2 13x13 grids", "conv2", (grid_a, grid_b)),
        ("simpson 1e6 steps (k=4, x=1/2)", "simpson_exp_monomial", (4, 0.5, 80.0, 1_000_000)),
    ]


def bench_kernels():
    print(f"{'workload':34s} {'python':>12s} {'compiled':>12s} {'speedup':>9s}")
    for label, name, args in workloads():
        py = _time(getattr(_kernels_py, name), *args)
        if _ckernels is None:
            print(f"{label:34s} {py * 1e3:10.3f}ms {'n/a':>12s} {'n/a':>9s}")
            continue
        cy = _time(getattr(_ckernels, name), *args)
        print(f"{label:34s} {py * 1e3:10.3f}ms {cy * 1e3:10.3f}ms {py / cy:8.1f}x")


CAMPAIGN_ARGS = [
    "--max-degree",
    "8",
    "--egf-order",
    "16",
    "--identities",
    "FE-PROD,FE-XY,subdivision-product,subdivision-trivariate,two-point,LAPLACE",
]


def bench_end_to_end():
    print("\nend-to-end campaign slice (subprocess per backend):")
    for label, pure in (("python", "1"), ("compiled", "0")):
        if pure == "0" and _ckernels is None:
            print(f"  {label:9s} extension not built, skipped")
            continue
        env = dict(os.environ, BERNKIT_PURE=pure)
        start = time.perf_counter()
        proc = subprocess.run(
            [sys.executable, "-m", "bernkit.cli", *CAMPAIGN_ARGS],
            env=env,
            stdout=subprocess.DEVNULL,
        )
        elapsed = time.perf_counter() - start
        status = "ok" if proc.returncode == 0 else f"exit {proc.returncode}"
        print(f"  {label:9s} {elapsed:6.2f}s  ({status})")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--skip-end-to-end", action="store_true")
    args = parser.parse_args()
    if _ckernels is None:
        print("note: compiled kernels are not built; showing pure-Python timings only\n")
    bench_kernels()
    if not args.skip_end_to_end:
        bench_end_to_end()


if __name__ == "__main__":
    main()
