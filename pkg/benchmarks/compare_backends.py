#!/usr/bin/env python3
"""Compare the pure-Python and compiled counting kernels on real workloads.

The kernels sit under every black count the package computes, so the four
workloads here exercise them through the public entry points rather than in
isolation: plain solving, exhaustive replay, adversary play, and game-tree
search.  Run after an editable install:

    python3 benchmarks/compare_backends.py [--repeat 3] [--csv out.csv]
"""

from __future__ import annotations

import argparse
import csv
import random
import sys
import time

from permmind import (
    GameConfig,
    StaticCodemaker,
    exhaustive_verify,
    minimax_value,
    random_injective_code,
    solve,
    verify_lower_bound_play,
    _kernel,
)


def workload_solve():
    config = GameConfig(64, 64)
    rng = random.Random(5)
    for _ in range(20):
        secret = random_injective_code(config, rng)
        recovered, _ = solve(StaticCodemaker(secret, config), config)
        assert recovered == secret


def workload_exhaustive():
    report = exhaustive_verify(GameConfig(6, 6))
    assert report.ok


def workload_adversary():
    queries, _ = verify_lower_bound_play(GameConfig(6, 6))
    assert queries >= 6


def workload_minimax():
    assert minimax_value(GameConfig(4, 4)) == 5


WORKLOADS = [
    ("solve 20x n=64", workload_solve),
    ("exhaustive n=6", workload_exhaustive),
    ("adversary n=6", workload_adversary),
    ("minimax n=4", workload_minimax),
]


def best_of(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        started = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - started)
    return best


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("--repeat", type=int, default=3, help="take the best of this many runs")
    parser.add_argument("--csv", help="also write the results as CSV")
    args = parser.parse_args(argv)

    backends = _kernel.available_backends()
    if "compiled" not in backends:
        print("note: compiled backend not built, timing pure only", file=sys.stderr)
    original = _kernel.active_backend
    timings: dict[str, dict[str, float]] = {name: {} for name, _ in WORKLOADS}
    try:
        for backend in backends:
            _kernel.set_backend(backend)
            for name, fn in WORKLOADS:
                timings[name][backend] = best_of(fn, args.repeat)
    finally:
        _kernel.set_backend(original)

    width = max(len(name) for name, _ in WORKLOADS)
    header = f"{'workload':<{width}}  " + "  ".join(f"{b:>10}" for b in backends)
    if len(backends) > 1:
        header += f"  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    rows = []
    for name, _ in WORKLOADS:
        cells = [f"{timings[name][b]:>9.3f}s" for b in backends]
        line = f"{name:<{width}}  " + "  ".join(cells)
        row = {"workload": name}
        for b in backends:
            row[b] = f"{timings[name][b]:.6f}"
        if "pure" in timings[name] and "compiled" in timings[name]:
            speedup = timings[name]["pure"] / timings[name]["compiled"]
            line += f"  {speedup:>7.2f}x"
            row["speedup"] = f"{speedup:.2f}"
        print(line)
        rows.append(row)

    if args.csv:
        fields = ["workload", *backends] + (["speedup"] if len(backends) > 1 else [])
        with open(args.csv, "w", newline="", encoding="utf-8") as fh:
            writer = csv.DictWriter(fh, fieldnames=fields, lineterminator="\n")
            writer.writeheader()
            writer.writerows(rows)
        print(f"\nwrote {args.csv}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
