"""Seeded property suite behind ``greedyscs verify``.

Every check maps a dataset to a list of counterexample descriptions; an
empty list means the property held on that input.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .disturb import (DisturbParams, disturb, predicted_overlap_len, step_roles,
                      tied_steps)
from .freq import inflate_important, interleave_sentinel, lifting_m, lifting_violations
from .gen import random_dataset
from .greedy import builtin_policies, run_greedy, run_greedy_sharp
from .oracle import BRUTE_FORCE_CAP, brute_force_scs, exact_scs, exact_scs_sharp
from .strcore import Dataset

SENTINEL = "$"
IMPORTANT = "a"


def corpus_dataset(seed: int, n_max: int = 7, len_max: int = 10) -> Dataset:
    """The seeded corpus: 2..n_max strings of length 3..len_max over 2-4 letters."""
    n = 2 + seed % max(1, n_max - 1)
    alphabet = 2 + seed % 3
    return random_dataset(seed, n, min(3, len_max), len_max, alphabet)


def policy_for(seed: int):
    return builtin_policies(seed)[seed % 4]


def block_sizes(n: int) -> list[int]:
    return [2 * n + 1, 10 * (2 * n + 1)]


def check_overlap_prediction(d: Dataset, seed: int) -> list[str]:
    n = len(d)
    res = run_greedy(d, policy_for(seed))
    roles = step_roles(res.trace, n)
    src = d.overlap_matrix()
    bad = []
    for m in block_sizes(n):
        got = disturb(d, roles, DisturbParams(m, SENTINEL)).overlap_matrix()
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                want = predicted_overlap_len(src[i][j], roles.as_right[j], roles.as_left[i],
                                             roles.trivial_start, m)
                if got[i][j] != want:
                    bad.append(f"m={m} pair ({i},{j}): overlap {got[i][j]}, predicted {want}")
    return bad


def check_order_preserved(d: Dataset, seed: int) -> list[str]:
    n = len(d)
    m = 2 * n + 1
    res = run_greedy(d, policy_for(seed))
    src = d.overlap_matrix()
    got = disturb(d, step_roles(res.trace, n), DisturbParams(m, SENTINEL)).overlap_matrix()
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    bad = []
    for p in pairs:
        for q in pairs:
            if src[p[0]][p[1]] > src[q[0]][q[1]] and not got[p[0]][p[1]] > got[q[0]][q[1]]:
                bad.append(f"{p} > {q} in source but {got[p[0]][p[1]]} <= {got[q[0]][q[1]]}")
    return bad


def check_policies_agree(d: Dataset, seed: int) -> list[str]:
    n = len(d)
    res = run_greedy(d, policy_for(seed))
    bad = []
    for m in block_sizes(n):
        d2 = disturb(d, step_roles(res.trace, n), DisturbParams(m, SENTINEL))
        runs = [run_greedy(d2, p) for p in builtin_policies(seed)]
        lengths = {r.length for r in runs}
        if len(lengths) != 1:
            bad.append(f"m={m}: final lengths differ {sorted(lengths)}")
        prefixes = {r.trace.nontrivial() for r in runs}
        if len(prefixes) != 1:
            bad.append(f"m={m}: non-trivial merge sequences differ")
        if runs[0].trace.trivial_start != res.trace.trivial_start:
            bad.append(f"m={m}: first trivial step {runs[0].trace.trivial_start}, "
                       f"source {res.trace.trivial_start}")
        for step, k, count in tied_steps(d2):
            bad.append(f"m={m}: step {step} has {count} pairs tied at overlap {k}")
    return bad


def check_scale_bound(d: Dataset, seed: int) -> list[str]:
    n = len(d)
    res = run_greedy(d, policy_for(seed))
    opt = exact_scs(d).length
    bad = []
    for m in block_sizes(n):
        d2 = disturb(d, step_roles(res.trace, n), DisturbParams(m, SENTINEL))
        opt2 = exact_scs(d2).length
        if abs(opt2 - (m + 1) * opt) > 2 * n * n:
            bad.append(f"m={m}: OPT'={opt2}, (m+1)OPT={(m + 1) * opt}, bound {2 * n * n}")
    return bad


def check_interleave(d: Dataset, seed: int) -> list[str]:
    d2 = interleave_sentinel(d, SENTINEL)
    bad = []
    plain = exact_scs(d).length
    sharp = exact_scs_sharp(d2, SENTINEL).length
    if plain != sharp:
        bad.append(f"OPT {plain} but interleaved sharp OPT {sharp}")
    src = d.overlap_matrix()
    got = d2.overlap_matrix()
    for i in range(len(d2)):
        for j, t in enumerate(d2.strings):
            if i != j:
                k = t.count(SENTINEL, 0, got[i][j])
                if k != src[i][j]:
                    bad.append(f"pair ({i},{j}): sentinel overlap {k}, source overlap {src[i][j]}")
    return bad


def check_inflation(d: Dataset, seed: int) -> list[str]:
    src = d.overlap_matrix()
    n = len(d)
    bad = []
    for m in (2, 3, 10):
        got = inflate_important(d, IMPORTANT, m).overlap_matrix()
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                k = src[i][j]
                count = d[j].count(IMPORTANT, 0, k)
                if got[i][j] != k + (m - 1) * count:
                    bad.append(f"m={m} {d[i]!r}->{d[j]!r}: {got[i][j]} != {k} + {m - 1}*{count}")
    return bad


def check_lifting(d: Dataset, seed: int) -> list[str]:
    res = run_greedy_sharp(d, IMPORTANT, policy_for(seed))
    m = lifting_m(d)
    return [f"m={m} step {t}: overlap {k} < best {best}"
            for t, k, best in lifting_violations(d, res, m)]


def check_oracles_agree(d: Dataset, seed: int) -> list[str]:
    if len(d) > BRUTE_FORCE_CAP:
        return []
    a = exact_scs(d)
    b = brute_force_scs(d)
    if a.length != b.length:
        return [f"DP {a.length} != brute force {b.length}"]
    if a.permutation != b.permutation:
        return [f"DP order {a.permutation} != brute force order {b.permutation}"]
    return []


def check_greedy_bounds(d: Dataset, seed: int) -> list[str]:
    opt = exact_scs(d).length
    bad = []
    for p in builtin_policies(seed):
        g = run_greedy(d, p)
        if g.length < opt:
            bad.append(f"{p}: greedy {g.length} below OPT {opt}")
        if 2 * g.length > 7 * opt:
            bad.append(f"{p}: greedy {g.length} exceeds 3.5 * OPT {opt}")
        if g.endpoint_mismatches:
            bad.append(f"{p}: chain overlaps differ from endpoint overlaps {g.endpoint_mismatches}")
    return bad


@dataclass
class Check:
    name: str
    run: Callable[[Dataset, int], list[str]]
    needs_important: bool = False


CHECKS = [
    Check("overlap prediction", check_overlap_prediction),
    Check("order preservation", check_order_preserved),
    Check("policies agree after disturbing", check_policies_agree),
    Check("optimum scale bound", check_scale_bound),
    Check("interleave correspondence", check_interleave),
    Check("inflation identity", check_inflation, needs_important=True),
    Check("frequency greedy lifting", check_lifting, needs_important=True),
    Check("DP equals brute force", check_oracles_agree),
    Check("greedy between OPT and 3.5 OPT", check_greedy_bounds),
]


@dataclass
class Outcome:
    name: str
    datasets: int = 0
    failures: list[tuple[int, tuple[str, ...], str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def run_suite(seeds: Iterable[int], n_max: int = 7, checks=None) -> list[Outcome]:
    checks = CHECKS if checks is None else checks
    outcomes = [Outcome(c.name) for c in checks]
    for seed in seeds:
        d = corpus_dataset(seed, n_max)
        for check, out in zip(checks, outcomes):
            if check.needs_important and IMPORTANT not in d.alphabet:
                continue
            out.datasets += 1
            for msg in check.run(d, seed):
                out.failures.append((seed, d.strings, msg))
    return outcomes
