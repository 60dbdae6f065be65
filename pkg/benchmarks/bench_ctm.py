#!/usr/bin/env python3
"""Benchmark the enumeration kernels: numba @njit vs pure-numpy lockstep.

Both paths produce bit-identical tables; this compares wall time on the
(2,2) space at 100 steps (331,776 machines). Run:

    python benchmarks/bench_ctm.py [--repeats 3]

Force a backend globally with MARNET_BACKEND=numpy|numba.
"""

import argparse
import time

from marnet.backend import numba_available
from marnet.ctm import build_ctm_table


def time_build(backend: str, repeats: int) -> tuple[float, object]:
    best = float("inf")
    table = None
    for _ in range(repeats):
        start = time.perf_counter()
        table = build_ctm_table(2, 100, 2, backend=backend)
        best = min(best, time.perf_counter() - start)
    return best, table


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    results = {}
    if numba_available():
        # first call includes JIT compilation; report both
        first, _ = time_build("numba", 1)
        warm, table_nb = time_build("numba", args.repeats)
        results["numba"] = (first, warm, table_nb)
    else:
        print("numba unavailable; benchmarking numpy only")

    t_np, table_np = time_build("numpy", args.repeats)

    print(f"{'backend':<10} {'cold (s)':>10} {'warm best (s)':>14} {'machines/s':>14}")
    if "numba" in results:
        first, warm, table_nb = results["numba"]
        print(f"{'numba':<10} {first:>10.2f} {warm:>14.3f} {331776 / warm:>14,.0f}")
        assert table_nb == table_np, "backends disagree"
    print(f"{'numpy':<10} {'-':>10} {t_np:>14.3f} {331776 / t_np:>14,.0f}")
    if "numba" in results:
        print(f"\nspeedup (warm): {t_np / results['numba'][1]:.1f}x; "
              "tables identical across backends")


if __name__ == "__main__":
    main()
