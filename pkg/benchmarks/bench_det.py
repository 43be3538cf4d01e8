"""Benchmark: compiled vs pure-Python determinant kernel.

Times both backends on direct-sum certificate matrices, whose size grows
like r^N, the one computation in the package where the kernel dominates.

Usage:
    python benchmarks/bench_det.py [--repeat 3] [--configs C2:6,C2:7,S3:4]
"""

import argparse
import statistics
import time

from lampk._detpure import bareiss_det as det_pure
from lampk.colimitk import claim_matrix
from lampk.grouprep import builtin

try:
    from lampk._detcore import bareiss_det as det_compiled
except ImportError:
    det_compiled = None


def time_fn(fn, matrix, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(matrix)
        times.append(time.perf_counter() - start)
    return result, min(times), statistics.mean(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument(
        "--configs",
        default="C2:5,C2:6,C2:7,C3:4,S3:4",
        help="comma-separated group:levels pairs",
    )
    args = parser.parse_args()

    if det_compiled is None:
        print("compiled kernel not available; timing the pure kernel only\n")

    header = f"{'config':>10} {'size':>6} {'pure (s)':>10} {'cython (s)':>11} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for item in args.configs.split(","):
        name, levels = item.strip().split(":")
        matrix = claim_matrix(builtin(name), int(levels))
        size = len(matrix)
        det_p, best_p, _ = time_fn(det_pure, matrix, args.repeat)
        if det_compiled is not None:
            det_c, best_c, _ = time_fn(det_compiled, matrix, args.repeat)
            assert det_p == det_c, "backends disagree!"
            print(
                f"{name}:{levels:>2} {size:>6} {best_p:>10.4f} {best_c:>11.4f} "
                f"{best_p / best_c:>7.2f}x"
            )
        else:
            print(f"{name}:{levels:>2} {size:>6} {best_p:>10.4f} {'-':>11} {'-':>8}")
        assert det_p in (1, -1), f"certificate failed for {name}:{levels}"


if __name__ == "__main__":
    main()
