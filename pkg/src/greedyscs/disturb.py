"""Sentinel-padding transformation that makes a chosen greedy run the only one.

Every symbol of ``s_i`` is preceded by ``m`` sentinels; the leading block is
shortened by the step at which ``s_i`` was the right part of a non-trivial
merge, and a tail block of length ``trivial_start - (step at which s_i was the
left part)`` is appended. Overlap lengths then scale by about ``m + 1`` while
every tie among non-empty overlaps is broken in favour of the recorded run.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .greedy import MergeTrace, TieBreakPolicy, run_greedy
from .oracle import DEFAULT_CAP, exact_scs
from .strcore import Dataset

VARIANTS = ("base", "append-one", "scaled-tail")
DEFAULT_M_CAP = 10**5


@dataclass(frozen=True)
class StepRoles:
    """Per string: the step where it was merged as right/left part, else ``trivial_start``."""

    as_right: tuple[int, ...]
    as_left: tuple[int, ...]
    trivial_start: int


@dataclass(frozen=True)
class DisturbParams:
    m: int
    sentinel: str = "$"
    variant: str = "base"

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        if len(self.sentinel) != 1:
            raise ValueError("sentinel must be a single symbol")

    def min_m(self, n: int) -> int:
        """Smallest admissible block length for ``n`` strings."""
        if self.variant == "scaled-tail":
            return 2 * n * (n + 1) + 1
        return 2 * n + 1


def step_roles(trace: MergeTrace, n: int) -> StepRoles:
    t_end = trace.trivial_start
    as_right = [t_end] * n
    as_left = [t_end] * n
    for t, step in enumerate(trace.nontrivial(), 1):
        as_right[step.right] = t
        as_left[step.left] = t
    return StepRoles(tuple(as_right), tuple(as_left), t_end)


def disturb_string(s: str, as_right: int, as_left: int, trivial_start: int, m: int,
                   sentinel: str = "$", tail_scale: int = 1, extra_tail: int = 0) -> str:
    pad = sentinel * m
    head = sentinel * (m - as_right)
    tail = sentinel * (tail_scale * (trivial_start - as_left) + extra_tail)
    return head + pad.join(s) + tail


def disturb(d: Dataset, roles: StepRoles, params: DisturbParams) -> Dataset:
    n = len(d)
    if params.sentinel in d.alphabet:
        raise ValueError(f"sentinel {params.sentinel!r} occurs in the dataset")
    if d.sentinel_in_use and d.sentinel == params.sentinel:
        raise ValueError(f"sentinel {params.sentinel!r} is already in use")
    if params.m < params.min_m(n):
        raise ValueError(f"m = {params.m} is below {params.min_m(n)} required for "
                         f"{n} strings ({params.variant})")
    if len(roles.as_right) != n or len(roles.as_left) != n:
        raise ValueError("step roles do not match the dataset size")
    scale = n if params.variant == "scaled-tail" else 1
    extra = 1 if params.variant == "append-one" else 0
    out = [disturb_string(s, roles.as_right[i], roles.as_left[i], roles.trivial_start,
                          params.m, params.sentinel, scale, extra)
           for i, s in enumerate(d.strings)]
    # Dataset() re-checks substring-freeness
    return Dataset(tuple(out), params.sentinel, True)


def disturb_by_run(d: Dataset, trace: MergeTrace, params: DisturbParams) -> Dataset:
    return disturb(d, step_roles(trace, len(d)), params)


def predicted_overlap_len(k: int, alpha_j: int, beta_i: int, trivial_start: int, m: int) -> int:
    """Overlap length of disturbed ``s_i``, ``s_j`` from the source overlap length ``k``.

    ``alpha_j`` is the right-part step of ``s_j``, ``beta_i`` the left-part step of ``s_i``.
    """
    if k > 0:
        return (m + 1) * k - alpha_j + trivial_start - beta_i
    return min(trivial_start - beta_i, m - alpha_j)


def tied_steps(d: Dataset, policy: TieBreakPolicy | None = None) -> list[tuple[int, int, int]]:
    """Steps of a greedy run where several pairs share a positive maximum overlap.

    Returns ``(step, max overlap, number of maximizing pairs)`` triples.
    """
    recorded = []

    def watch(step, candidates, chosen):
        if len(candidates) > 1 and candidates[0].overlap_len > 0:
            recorded.append((step, candidates[0].overlap_len, len(candidates)))

    run_greedy(d, policy, on_step=watch)
    return recorded


def check_tie_free(d_prime: Dataset) -> bool:
    return not tied_steps(d_prime)


def choose_m_for_gap(d: Dataset, trace: MergeTrace, ratio: Fraction | int, *,
                     sentinel: str = "$", m_cap: int = DEFAULT_M_CAP,
                     oracle_cap: int = DEFAULT_CAP) -> int:
    """Smallest ``m`` on the doubling schedule from ``2n + 1`` keeping greedy above ``ratio * OPT``.

    ``trace`` is the run of the greedy instantiation whose excess should survive.
    """
    ratio = Fraction(ratio)
    n = len(d)
    greedy_len = d.total_length() - sum(s.overlap_len for s in trace.steps)
    opt = exact_scs(d, oracle_cap).length
    if not greedy_len > ratio * opt:
        raise ValueError(f"no gap to preserve: greedy {greedy_len} <= {ratio} * OPT {opt}")
    roles = step_roles(trace, n)
    m = 2 * n + 1
    tried = []
    while m <= m_cap:
        d2 = disturb(d, roles, DisturbParams(m, sentinel))
        g2 = run_greedy(d2).length
        o2 = exact_scs(d2, oracle_cap).length
        if g2 > ratio * o2:
            return m
        tried.append((m, g2, o2))
        m *= 2
    raise ValueError(f"no m <= {m_cap} preserves the gap; tried (m, greedy, OPT) = {tried}")


def overlap_report(d: Dataset, d_prime: Dataset, roles: StepRoles, m: int,
                   variant: str = "base") -> dict:
    """Predicted and measured disturbed overlap matrices (base/append-one only)."""
    n = len(d)
    src = d.overlap_matrix()
    actual = d_prime.overlap_matrix()
    predicted = None
    if variant == "base":
        predicted = [[0 if i == j else predicted_overlap_len(
            src[i][j], roles.as_right[j], roles.as_left[i], roles.trivial_start, m)
            for j in range(n)] for i in range(n)]
    return {
        "m": m,
        "variant": variant,
        "trivial_start": roles.trivial_start,
        "as_right": list(roles.as_right),
        "as_left": list(roles.as_left),
        "source_overlaps": src,
        "predicted_overlaps": predicted,
        "actual_overlaps": actual,
    }

