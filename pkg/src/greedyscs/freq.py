"""Superstrings measured by the number of occurrences of one important symbol."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .greedy import GreedyResult
from .strcore import Dataset, overlap_len


@dataclass(frozen=True)
class SharpMetric:
    important: str

    def __post_init__(self):
        if len(self.important) != 1:
            raise ValueError("important symbol must be a single symbol")

    def length(self, s: str) -> int:
        return s.count(self.important)

    def overlap_len(self, s: str, t: str) -> int:
        return t.count(self.important, 0, overlap_len(s, t))

    def permutation_length(self, d: Dataset, perm: Sequence[int]) -> int:
        """Important-symbol count of the permutation superstring, summed per string and overlap."""
        strings = d.strings
        return (sum(self.length(s) for s in strings)
                - sum(self.overlap_len(strings[a], strings[b]) for a, b in zip(perm, perm[1:])))


def sharp_length(s: str, metric: SharpMetric | str) -> int:
    if isinstance(metric, str):
        metric = SharpMetric(metric)
    return metric.length(s)


def interleave_sentinel(d: Dataset, sentinel: str) -> Dataset:
    """Put ``sentinel`` before every symbol: ``abc`` becomes ``$a$b$c``."""
    if len(sentinel) != 1:
        raise ValueError("sentinel must be a single symbol")
    if sentinel in d.alphabet:
        raise ValueError(f"sentinel {sentinel!r} occurs in the dataset")
    return Dataset(tuple(sentinel + sentinel.join(s) for s in d.strings), sentinel, True)


def inflate_string(s: str, important: str, m: int) -> str:
    return s.replace(important, important * m)


def inflate_important(d: Dataset, important: str, m: int) -> Dataset:
    """Replace every occurrence of ``important`` by ``m`` copies of it."""
    if m < 1:
        raise ValueError("m must be positive")
    return Dataset(tuple(inflate_string(s, important, m) for s in d.strings),
                   d.sentinel, d.sentinel_in_use)


def lifting_m(d: Dataset) -> int:
    """Inflation factor at which count differences dominate plain overlap differences."""
    ov = d.overlap_matrix()
    top = max((max(row) for row in ov), default=0)
    return 2 * top * len(d) + 1


def lifting_violations(d: Dataset, res: GreedyResult, m: int) -> list[tuple[int, int, int]]:
    """Replay a frequency-greedy merge order on the inflated dataset.

    Returns ``(step, replayed overlap, best available overlap)`` for every step
    whose pair does not attain the maximum plain overlap there.
    """
    important = res.trace.important
    if important is None:
        raise ValueError("result was not produced by the frequency greedy")
    inflated = [inflate_string(s, important, m) for s in d.strings]
    chains = {i: ([i], s) for i, s in enumerate(inflated)}
    bad = []
    for t, step in enumerate(res.trace.steps, 1):
        best = 0
        for a_members, a_text in chains.values():
            for b_members, b_text in chains.values():
                if b_members is a_members:
                    continue
                best = max(best, overlap_len(a_text, b_text))
        left_head = next(h for h, (mem, _) in chains.items() if mem[-1] == step.left)
        left_members, left_text = chains[left_head]
        right_members, right_text = chains.pop(step.right)
        k = overlap_len(left_text, right_text)
        if k < best:
            bad.append((t, k, best))
        chains[left_head] = (left_members + right_members, left_text + right_text[k:])
    return bad

