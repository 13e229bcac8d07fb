#!/usr/bin/env python3
"""Benchmark the compiled solve kernel against the pure-Python fallback.

Runs the dense retrograde solve for a few uniform games with both kernels
and prints the timings side by side.  Use --large for roughly million-state
instances (the pure side then takes a while).
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from wardengame import _dense_py

try:
    from wardengame import _dense as compiled
except ImportError:
    compiled = None

SMALL = [(2, 12), (3, 8), (4, 6), (6, 5), (10, 4)]
LARGE = [(2, 20), (4, 10), (10, 6), (16, 5)]


def run(kernel, m: int, n: int) -> tuple[float, np.ndarray]:
    goal = m**n - 1  # the all-(m-1) position
    started = time.perf_counter()
    values = kernel.solve_dense(m, n, [goal])
    return time.perf_counter() - started, values


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--large", action="store_true", help="add million-state cases")
    args = parser.parse_args()

    cases = SMALL + (LARGE if args.large else [])
    print(f"{'game':>10} {'states':>10} {'python':>10} {'cython':>10} {'speedup':>9}")
    for m, n in cases:
        py_time, py_values = run(_dense_py, m, n)
        if compiled is None:
            print(f"{f'({m},{n})':>10} {m ** n:>10} {py_time:>9.3f}s {'-':>10} {'-':>9}")
            continue
        cy_time, cy_values = run(compiled, m, n)
        if not np.array_equal(py_values, cy_values):
            print(f"({m},{n}): KERNELS DISAGREE")
            return 1
        speedup = py_time / cy_time if cy_time > 0 else float("inf")
        print(
            f"{f'({m},{n})':>10} {m ** n:>10} {py_time:>9.3f}s {cy_time:>9.3f}s "
            f"{speedup:>8.1f}x"
        )
    if compiled is None:
        print("compiled kernel not built; showing the fallback only")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
