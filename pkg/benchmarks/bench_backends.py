#!/usr/bin/env python3
"""Benchmark the zero-quadruple kernel across backends.

Runs the same meet-in-the-middle search with the numba kernel, the
vectorized numpy path, and the pure-Python big-int engine, and prints a
wall-clock comparison.  The numba timing excludes JIT compilation (one
warm-up call per workload before the timed loop).

Usage:
    python3 benchmarks/bench_backends.py [--repeats N]
"""

from __future__ import annotations

import argparse
import os
import time

from unitcycle.backends import BACKEND_ENV, available_backends, zero_quadruples
from unitcycle.relsearch import SearchConfig, term_table
from unitcycle.sring import InversionSet

WORKLOADS = [
    ("small", (5, 7, 11), SearchConfig.general(4)),
    ("medium", (2, 3, 5, 7), SearchConfig.general(4)),
    ("large", (2, 3, 5, 7, 11), SearchConfig.general(3)),
]


def run(backend: str, values: list[int], repeats: int) -> tuple[float, int]:
    os.environ[BACKEND_ENV] = backend
    try:
        zero_quadruples(values)  # warm-up: JIT compile / allocator touch
        best = min(
            _timed(values) for _ in range(repeats)
        )
        return best, len(zero_quadruples(values))
    finally:
        os.environ.pop(BACKEND_ENV, None)


def _timed(values: list[int]) -> float:
    t0 = time.perf_counter()
    zero_quadruples(values)
    return time.perf_counter() - t0


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5, help="timed runs per cell (best-of)")
    args = parser.parse_args()

    backends = available_backends()
    print(f"backends: {', '.join(backends)}   (best of {args.repeats} runs, warm-up excluded)")
    header = f"{'workload':<10} {'terms':>6} " + "".join(f"{b:>12}" for b in backends) + f"{'numba speedup':>16}"
    print(header)
    print("-" * len(header))

    for name, primes, cfg in WORKLOADS:
        values = sorted(term_table(InversionSet.of(*primes), cfg.bound, ceiling=10**7))
        timings = {}
        counts = set()
        for backend in backends:
            secs, hits = run(backend, values, args.repeats)
            timings[backend] = secs
            counts.add(hits)
        if len(counts) != 1:
            raise SystemExit(f"backends disagree on {name}: {counts}")
        base = timings.get("python", max(timings.values()))
        fast = timings.get("numba", min(timings.values()))
        row = f"{name:<10} {len(values):>6} " + "".join(
            f"{timings[b] * 1000:>10.2f}ms" for b in backends
        )
        row += f"{base / fast:>15.1f}x"
        print(row + f"   ({next(iter(counts))} quadruples)")


if __name__ == "__main__":
    main()
