#!/usr/bin/env python3
"""Benchmark the tree-walk kernels: compiled extension vs pure Python.

Usage: python benchmarks/bench_treewalk.py [--max-k N] [--repeat R]

Times low_weight_table over the default odd sequence for each k, reporting
the best of R runs per backend and the speedup.  The two tables are also
compared for equality on every run.
"""

from __future__ import annotations

import argparse
import time

from evenzeta import _treewalk_py
from evenzeta.sequences import ODD_NUMBERS
from evenzeta.trees import catalan

try:
    from evenzeta import _treewalk as _compiled
except ImportError:
    _compiled = None


def best_time(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-k", type=int, default=13)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if _compiled is None:
        print("compiled kernel not available; showing pure-Python times only")
        print(f"{'k':>3} {'trees':>9} {'pure (s)':>10}")
        for k in range(6, args.max_k + 1):
            values = ODD_NUMBERS.values_upto(k)
            t, _ = best_time(lambda: _treewalk_py.low_weight_table(k, values), args.repeat)
            print(f"{k:>3} {catalan(k - 1):>9} {t:>10.4f}")
        return 0

    print(f"{'k':>3} {'trees':>9} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8}")
    for k in range(6, args.max_k + 1):
        values = ODD_NUMBERS.values_upto(k)
        t_pure, r_pure = best_time(
            lambda: _treewalk_py.low_weight_table(k, values), args.repeat
        )
        t_comp, r_comp = best_time(
            lambda: _compiled.low_weight_table(k, values), args.repeat
        )
        assert r_pure == r_comp, f"kernel disagreement at k={k}"
        print(
            f"{k:>3} {catalan(k - 1):>9} {t_pure:>10.4f} {t_comp:>13.4f} "
            f"{t_pure / t_comp:>7.1f}x"
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
