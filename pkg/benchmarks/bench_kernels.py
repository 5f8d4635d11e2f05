"""Compare the pure Python enumeration kernels against the compiled ones.

Usage:

    python3 benchmarks/bench_kernels.py [--repeat N]

Each workload runs `--repeat` times per backend and reports the best
time.  When the compiled extension is unavailable (or disabled through
REPVOL_PURE_PYTHON) only the pure Python column is produced.
"""

import argparse
import math
import os
import time

from repvol import _kernels_py

if os.environ.get("REPVOL_PURE_PYTHON"):
    _speedups = None
else:
    try:
        from repvol import _speedups
    except ImportError:
        _speedups = None

ENUMERATE_WORKLOADS = [
    ((5, 6, 7, 7), 3),
    ((6, 7, 8, 9), 3),
]

BRUTE_FORCE_WORKLOADS = [
    ((5, 6, 7), 2, 2),
    ((5, 6, 7, 4), 3, 2),
    ((7, 7, 7, 7), 3, 2),
]


def best_of(repeat, fn, *args):
    best = math.inf
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def run(repeat: int) -> None:
    rows = []
    for a, g in ENUMERATE_WORKLOADS:
        L = math.lcm(*a)
        w = tuple(L // ai for ai in a)
        label = f"enumerate a={a} g={g}"
        t_py, r_py = best_of(repeat, _kernels_py.enumerate_classes, a, w, L, g)
        t_c = None
        if _speedups is not None:
            t_c, r_c = best_of(repeat, _speedups.enumerate_classes, a, w, L, g)
            assert r_c == r_py, f"backend mismatch on {label}"
        rows.append((label, len(r_py), t_py, t_c))
    for a, g, span in BRUTE_FORCE_WORKLOADS:
        L = math.lcm(*a)
        w = tuple(L // ai for ai in a)
        label = f"brute-force a={a} g={g} span={span}"
        t_py, r_py = best_of(repeat, _kernels_py.brute_force_classes, a, w, L, g, span)
        t_c = None
        if _speedups is not None:
            t_c, r_c = best_of(repeat, _speedups.brute_force_classes, a, w, L, g, span)
            assert r_c == r_py, f"backend mismatch on {label}"
        rows.append((label, len(r_py), t_py, t_c))

    width = max(len(r[0]) for r in rows)
    header = f"{'workload':<{width}}  {'classes':>7}  {'pure':>10}  {'compiled':>10}  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for label, n, t_py, t_c in rows:
        if t_c is None:
            print(f"{label:<{width}}  {n:>7}  {t_py:>9.4f}s  {'n/a':>10}  {'n/a':>8}")
        else:
            print(
                f"{label:<{width}}  {n:>7}  {t_py:>9.4f}s  {t_c:>9.4f}s  {t_py / t_c:>7.1f}x"
            )
    if _speedups is None:
        print("\ncompiled kernels unavailable; showing the pure Python backend only")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--repeat", type=int, default=3, help="runs per workload, best time wins (default 3)"
    )
    args = parser.parse_args()
    if args.repeat < 1:
        parser.error("--repeat must be at least 1")
    run(args.repeat)


if __name__ == "__main__":
    main()
