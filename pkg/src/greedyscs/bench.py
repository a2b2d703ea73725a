"""Timing comparison of the compiled and pure-Python kernels."""
from __future__ import annotations

import time

from . import kernels
from .disturb import DisturbParams, disturb_by_run
from .gen import random_dataset, worst_case_family
from .greedy import run_greedy
from .oracle import exact_scs


def _best_of(fn, repeat):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def workloads(dp_n: int = 12, family_n: int = 20, m: int = 500):
    family = worst_case_family(family_n)
    trace = run_greedy(family).trace
    disturbed = disturb_by_run(family, trace, DisturbParams(m))
    dp_data = random_dataset(dp_n, dp_n, 8, 12, 4)
    return [
        (f"overlap matrix, disturbed family n={family_n} m={m}",
         lambda: disturbed.overlap_matrix()),
        (f"greedy run, disturbed family n={family_n} m={m}",
         lambda: run_greedy(disturbed)),
        (f"exact DP, {len(dp_data)} random strings",
         lambda: exact_scs(dp_data)),
    ]


def run_bench(repeat: int = 3, **sizes) -> list[tuple[str, dict[str, float]]]:
    """Best-of-``repeat`` seconds per workload and backend."""
    rows = []
    backends = list(kernels.available_backends())
    for name, fn in workloads(**sizes):
        timings = {}
        for backend in backends:
            with kernels.use_backend(backend):
                timings[backend] = _best_of(fn, repeat)
        rows.append((name, timings))
    return rows


def format_rows(rows) -> str:
    lines = []
    for name, timings in rows:
        cells = "  ".join(f"{b} {t * 1e3:9.2f} ms" for b, t in timings.items())
        speedup = ""
        if "cython" in timings and timings["cython"] > 0:
            speedup = f"  x{timings['python'] / timings['cython']:.1f}"
        lines.append(f"{name:<48} {cells}{speedup}")
    return "\n".join(lines)
