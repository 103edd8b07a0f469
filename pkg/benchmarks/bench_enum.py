"""Benchmark the short-vector enumeration backends against each other.

Usage:  python3 benchmarks/bench_enum.py [--repeats N]

Compares the numba-compiled kernel, the plain numpy/Python loop and the
exact Fraction reference on the standard workloads.  The numba timing is
reported after a warm-up call so JIT compilation is not billed to it.
"""

import argparse
import statistics
import time

from eisenlat import _kernels
from eisenlat.lattice import enumerate_vectors_of_norm, standard_lattice

WORKLOADS = [
    ("A2 roots", "A2", -2),
    ("E6 roots", "E6", -2),
    ("E8 roots", "E8", -2),
    ("E8 norm -4", "E8", -4),
    ("K12 minimal vectors", "K12", -4),
]

SLOW_FOR_EXACT = {"E8 norm -4", "K12 minimal vectors"}


def bench(lat, nu, backend, repeats):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = enumerate_vectors_of_norm(lat, nu, backend=backend)
        times.append(time.perf_counter() - t0)
    return len(result), min(times), statistics.mean(times)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    backends = ["numpy", "exact"]
    if _kernels.HAVE_NUMBA:
        backends.insert(0, "numba")
        enumerate_vectors_of_norm(standard_lattice("A2"), -2, backend="numba")  # warm up
    else:
        print("numba not available; benchmarking the fallback paths only")

    print(f"{'workload':<22}{'backend':<8}{'vectors':>8}{'best':>12}{'mean':>12}")
    for label, name, nu in WORKLOADS:
        lat = standard_lattice(name)
        for backend in backends:
            if backend == "exact" and label in SLOW_FOR_EXACT:
                print(f"{label:<22}{backend:<8}{'-':>8}{'skipped':>12}{'':>12}")
                continue
            count, best, mean = bench(lat, nu, backend, args.repeats)
            print(f"{label:<22}{backend:<8}{count:>8}{best * 1e3:>10.2f}ms{mean * 1e3:>10.2f}ms")


if __name__ == "__main__":
    main()
