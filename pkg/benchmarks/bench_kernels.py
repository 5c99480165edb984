"""Compare the numba kernels with the pure numpy fallback.

Run with ``python benchmarks/bench_kernels.py``.  The backend is switched via
DKFORGE_BACKEND, exactly as a user would, and each workload is timed after one
warm-up call so JIT compilation is excluded.
"""

import os
import time

import numpy as np

from dkforge import doldkan as dk
from dkforge import generators as gen
from dkforge import linalg as la


def snf_batch(mats):
    for A in mats:
        la.snf(A)


def kernel_batch(mats):
    for A in mats:
        la.kernel_basis(A)


def normalize_batch(groups):
    for A in groups:
        dk.NormalizationData(A, verify=False)


def timed(fn, arg, repeats=3):
    fn(arg)
    best = float("inf")
    for _ in range(repeats):
        t = time.perf_counter()
        fn(arg)
        best = min(best, time.perf_counter() - t)
    return best


def main():
    g = gen.rng(0)
    # sizes where int64 elimination does not overflow; larger entries fall back
    # to exact object arithmetic on both backends and time the same
    small = [gen.random_matrix(g, 6, 6, -9, 9) for _ in range(500)]
    mats = [gen.random_matrix(g, 12, 14, -1, 1) for _ in range(200)]
    wide = [gen.random_matrix(g, 20, 30, -1, 1) for _ in range(50)]
    groups = [gen.random_simplicial(g, 4) for _ in range(20)]
    workloads = [
        ("snf 500 x (6x6)", snf_batch, small),
        ("snf 200 x (12x14)", snf_batch, mats),
        ("kernel 50 x (20x30)", kernel_batch, wide),
        ("normalize 20 groups, T=4", normalize_batch, groups),
    ]
    print(f"{'workload':28s} {'numpy [s]':>10s} {'numba [s]':>10s} {'speedup':>8s}")
    for name, fn, arg in workloads:
        times = {}
        for b in ("numpy", "numba"):
            os.environ["DKFORGE_BACKEND"] = b
            times[b] = timed(fn, arg)
        print(f"{name:28s} {times['numpy']:10.4f} {times['numba']:10.4f} {times['numpy'] / times['numba']:8.1f}x")
    # both backends must agree exactly
    results = []
    for b in ("numpy", "numba"):
        os.environ["DKFORGE_BACKEND"] = b
        results.append(la.snf(small[0]).D)
    np.testing.assert_array_equal(*results)
    os.environ.pop("DKFORGE_BACKEND", None)


if __name__ == "__main__":
    main()
