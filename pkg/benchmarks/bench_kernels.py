"""Time each integer kernel on its numba and numpy paths.

    python3 benchmarks/bench_kernels.py [--repeat N]

The first numba call includes JIT compilation and is reported separately.
"""

import argparse
import time

import numpy as np

from rsfactors import _kernels


def cases():
    rng = np.random.default_rng(0)
    table = rng.integers(-1, 20, size=5**4).astype(np.int64)
    parts = _kernels.numpy_impl["partition_table"](12, 6)
    return {
        "partition_table": (12, 6),
        "modulus_exponents": (parts,),
        "count_gl_and_k0": (3, 3),
        "gauss_histogram": (table, 20, 7, 625, 2500),
    }


def best_of(fn, args, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    print(f"{'kernel':20s} {'numpy ms':>10s} {'numba ms':>10s} {'jit ms':>10s} {'speedup':>8s}")
    for name, kargs in cases().items():
        np_t = best_of(_kernels.numpy_impl[name], kargs, args.repeat)
        if not _kernels.HAVE_NUMBA:
            print(f"{name:20s} {np_t * 1e3:10.3f} {'-':>10s} {'-':>10s} {'-':>8s}")
            continue
        t0 = time.perf_counter()
        _kernels.numba_impl[name](*kargs)
        jit = time.perf_counter() - t0
        nb_t = best_of(_kernels.numba_impl[name], kargs, args.repeat)
        print(f"{name:20s} {np_t * 1e3:10.3f} {nb_t * 1e3:10.3f} {jit * 1e3:10.1f} {np_t / nb_t:7.1f}x")


if __name__ == "__main__":
    main()
