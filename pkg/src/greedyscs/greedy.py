"""Greedy superstring construction with explicit tie-breaking.

Each step merges, among all ordered pairs of distinct live chains, a pair of
maximum overlap. All maximizing pairs are collected in row-major order of
(tail index of the left chain, head index of the right chain) and handed to
a :class:`TieBreakPolicy`. The frequency variant ranks pairs by the number
of important symbols in the overlap first and by plain overlap length second.
"""
from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from . import kernels
from .strcore import Dataset, superstring_length

log = logging.getLogger(__name__)

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
RESULT_FORMAT = "greedyscs-result/1"


def splitmix64(state: int) -> tuple[int, int]:
    """One SplitMix64 step: returns ``(output, next_state)``.

    state' = state + 0x9E3779B97F4A7C15 (mod 2^64)
    z = (state' ^ (state' >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    output = z ^ (z >> 31)
    """
    state = (state + GOLDEN_GAMMA) & MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31), state


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        out, self.state = splitmix64(self.state)
        return out

    def below(self, bound: int) -> int:
        return self.next() % bound


class Candidate(NamedTuple):
    left: int  # original index at the tail of the left chain
    right: int  # original index at the head of the right chain
    overlap_len: int
    sharp_len: int | None
    left_text: str
    right_text: str

    def merged(self) -> str:
        return self.left_text + self.right_text[self.overlap_len:]


POLICY_KINDS = ("first", "last", "lex", "random")


@dataclass(frozen=True)
class TieBreakPolicy:
    """Picks one pair among the tied maximum-overlap candidates.

    ``first``/``last`` take the ends of the row-major order, ``lex`` the pair
    whose merge is lexicographically smallest (earliest on equal merges), and
    ``random`` draws the k-th SplitMix64 output of the stream seeded with
    ``seed`` at step k, modulo the number of candidates. The choice depends
    only on the candidates, the seed and the step number.
    """

    kind: str = "first"
    seed: int = 0

    def __post_init__(self):
        if self.kind not in POLICY_KINDS:
            raise ValueError(f"unknown policy {self.kind!r}")

    @classmethod
    def parse(cls, text: str) -> "TieBreakPolicy":
        if text.startswith("random:"):
            return cls("random", int(text[len("random:"):]))
        if text == "random":
            return cls("random", 0)
        return cls(text)

    def __str__(self):
        return f"random:{self.seed}" if self.kind == "random" else self.kind

    def choose(self, candidates: Sequence[Candidate], step: int) -> Candidate:
        if not candidates:
            raise ValueError("no candidates")
        if self.kind == "first":
            return candidates[0]
        if self.kind == "last":
            return candidates[-1]
        if self.kind == "lex":
            return min(candidates, key=Candidate.merged)
        value, _ = splitmix64((self.seed + (step - 1) * GOLDEN_GAMMA) & MASK64)
        return candidates[value % len(candidates)]


def builtin_policies(seed: int = 1) -> list[TieBreakPolicy]:
    return [TieBreakPolicy("first"), TieBreakPolicy("last"),
            TieBreakPolicy("lex"), TieBreakPolicy("random", seed)]


@dataclass
class Chain:
    members: list[int]
    text: str

    @property
    def head(self) -> int:
        return self.members[0]

    @property
    def tail(self) -> int:
        return self.members[-1]


class MergeStep(NamedTuple):
    left: int
    right: int
    overlap_len: int
    sharp_len: int | None = None


@dataclass(frozen=True)
class MergeTrace:
    """Ordered merges; ``first_trivial`` is the 1-based step of the first empty merge.

    For the frequency variant (``important`` set) a merge is trivial when its
    overlap holds no important symbol.
    """

    steps: tuple[MergeStep, ...]
    first_trivial: int | None
    important: str | None = None

    @property
    def trivial_start(self) -> int:
        """``first_trivial``, or one past the last step when every merge overlaps."""
        if self.first_trivial is not None:
            return self.first_trivial
        return len(self.steps) + 1

    def weight(self, step: MergeStep) -> int:
        return step.sharp_len if self.important is not None else step.overlap_len

    def nontrivial(self) -> tuple[MergeStep, ...]:
        return self.steps[: self.trivial_start - 1]


@dataclass
class GreedyResult:
    superstring: str
    permutation: list[int]
    trace: MergeTrace
    endpoint_mismatches: list[tuple[int, int, int]] = field(default_factory=list)
    policy: str = ""

    @property
    def length(self) -> int:
        return len(self.superstring)

    def to_dict(self) -> dict:
        steps = [list(s) if self.trace.important is not None else list(s[:3])
                 for s in self.trace.steps]
        return {
            "format": RESULT_FORMAT,
            "policy": self.policy,
            "superstring": self.superstring,
            "length": self.length,
            "permutation": list(self.permutation),
            "important": self.trace.important,
            "steps": steps,
            "first_trivial": self.trace.first_trivial,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2)

    @classmethod
    def from_dict(cls, doc: dict) -> "GreedyResult":
        if doc.get("format") != RESULT_FORMAT:
            raise ValueError(f"unsupported result format {doc.get('format')!r}")
        steps = tuple(MergeStep(*s) for s in doc["steps"])
        trace = MergeTrace(steps, doc["first_trivial"], doc.get("important"))
        return cls(doc["superstring"], list(doc["permutation"]), trace,
                   policy=doc.get("policy", ""))

    @classmethod
    def from_json(cls, text: str) -> "GreedyResult":
        return cls.from_dict(json.loads(text))


def _run(d: Dataset, policy: TieBreakPolicy, important: str | None,
         on_step=None) -> GreedyResult:
    strings = d.strings
    chains = {i: Chain([i], s) for i, s in enumerate(strings)}
    # (left head, right head) -> (overlap length, important count)
    cache: dict[tuple[int, int], tuple[int, int | None]] = {}

    def score(a: Chain, b: Chain):
        key = (a.head, b.head)
        hit = cache.get(key)
        if hit is None:
            k = kernels.overlap_len(a.text, b.text)
            sharp = b.text.count(important, 0, k) if important is not None else None
            hit = cache[key] = (k, sharp)
        return hit

    steps = []
    mismatches = []
    first_trivial = None
    step_no = 0
    while len(chains) > 1:
        step_no += 1
        live = sorted(chains.values(), key=lambda c: c.tail)
        heads = sorted(chains.values(), key=lambda c: c.head)
        best_key = None
        cands = []
        for a in live:
            for b in heads:
                if a is b:
                    continue
                k, sharp = score(a, b)
                rank = (sharp, k) if important is not None else k
                if best_key is None or rank > best_key:
                    best_key = rank
                    cands = [Candidate(a.tail, b.head, k, sharp, a.text, b.text)]
                elif rank == best_key:
                    cands.append(Candidate(a.tail, b.head, k, sharp, a.text, b.text))
        pick = policy.choose(cands, step_no)
        if on_step is not None:
            on_step(step_no, cands, pick)
        left = next(c for c in chains.values() if c.tail == pick.left)
        right = chains[pick.right]
        endpoint = kernels.overlap_len(strings[pick.left], strings[pick.right])
        if endpoint != pick.overlap_len:
            mismatches.append((step_no, pick.overlap_len, endpoint))
            log.warning("step %d: chain overlap %d differs from endpoint overlap %d (%r)",
                        step_no, pick.overlap_len, endpoint, strings)
        weight = pick.sharp_len if important is not None else pick.overlap_len
        if weight == 0 and first_trivial is None:
            first_trivial = step_no
        steps.append(MergeStep(pick.left, pick.right, pick.overlap_len, pick.sharp_len))

        del chains[right.head]
        left.members.extend(right.members)
        left.text = pick.merged()
        for key in [k for k in cache if left.head in k or right.head in k]:
            del cache[key]

    (final,) = chains.values()
    trace = MergeTrace(tuple(steps), first_trivial, important)
    return GreedyResult(final.text, final.members, trace, mismatches, str(policy))


def run_greedy(d: Dataset, policy: TieBreakPolicy | None = None, *,
               on_step=None) -> GreedyResult:
    """Merge a maximum-overlap pair of chains until one chain remains.

    ``on_step(step, candidates, chosen)`` is called once per merge.
    """
    return _run(d, policy or TieBreakPolicy(), None, on_step)


def run_greedy_sharp(d: Dataset, important: str,
                     policy: TieBreakPolicy | None = None, *, on_step=None) -> GreedyResult:
    """Greedy under the important-symbol count, longest plain overlap among equal counts."""
    if len(important) != 1:
        raise ValueError("important symbol must be a single symbol")
    return _run(d, policy or TieBreakPolicy(), important, on_step)


def trace_problems(d: Dataset, res: GreedyResult) -> list[str]:
    """Every violated trace invariant, as readable messages; empty when valid."""
    problems = []
    trace = res.trace
    n = len(d)
    if len(trace.steps) != n - 1:
        problems.append(f"expected {n - 1} steps, got {len(trace.steps)}")
        return problems
    weights = [trace.weight(s) for s in trace.steps]
    if any(w is None for w in weights):
        return problems + ["missing important-symbol counts"]
    for t in range(1, len(weights)):
        if weights[t] > weights[t - 1]:
            problems.append(f"overlap grows at step {t + 1}: {weights[t - 1]} -> {weights[t]}")
    first_zero = next((t + 1 for t, w in enumerate(weights) if w == 0), None)
    if first_zero != trace.first_trivial:
        problems.append(f"first_trivial {trace.first_trivial} but first empty merge at {first_zero}")
    if first_zero is not None and any(w for w in weights[first_zero - 1:]):
        problems.append("non-trivial merge after the first trivial merge")
    lefts = [s.left for s in trace.steps if trace.weight(s) > 0]
    rights = [s.right for s in trace.steps if trace.weight(s) > 0]
    if len(set(lefts)) != len(lefts) or len(set(rights)) != len(rights):
        problems.append("an index is merged twice on the same side")

    chains = {i: Chain([i], s) for i, s in enumerate(d.strings)}
    for t, s in enumerate(trace.steps, 1):
        left = next((c for c in chains.values() if c.tail == s.left), None)
        right = chains.get(s.right)
        if left is None or right is None or left is right:
            problems.append(f"step {t} does not join a chain tail to another chain head")
            return problems
        k = kernels.overlap_len(left.text, right.text)
        if k != s.overlap_len:
            problems.append(f"step {t} records overlap {s.overlap_len}, replay gives {k}")
        del chains[right.head]
        left.members.extend(right.members)
        left.text = left.text + right.text[k:]
    (final,) = chains.values()
    if final.text != res.superstring:
        problems.append("replayed superstring differs")
    if final.members != list(res.permutation):
        problems.append("replayed permutation differs")
    elif superstring_length(d, res.permutation) != len(res.superstring):
        problems.append("superstring length disagrees with the permutation length")
    return problems


def verify_trace(d: Dataset, res: GreedyResult) -> bool:
    return not trace_problems(d, res)
