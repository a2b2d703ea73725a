"""Exact shortest-superstring solvers used as ground truth."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .strcore import Dataset, superstring_of_permutation

DEFAULT_CAP = 18
BRUTE_FORCE_CAP = 8


@dataclass(frozen=True)
class ExactResult:
    length: int
    permutation: list[int]
    superstring: str


def _check_cap(d: Dataset, cap: int) -> None:
    if len(d) > cap:
        raise ValueError(
            f"{len(d)} strings exceed the exact-solver cap of {cap}; "
            f"raise the cap (memory grows as 2^n * n) or use brute force for n <= {BRUTE_FORCE_CAP}")


def exact_scs(d: Dataset, cap: int = DEFAULT_CAP) -> ExactResult:
    """Shortest superstring via the subset DP that maximizes total overlap.

    Among optimal orders the lexicographically smallest permutation is returned.
    """
    _check_cap(d, cap)
    gain, order = kernels.max_overlap_path(d.overlap_matrix())
    return ExactResult(d.total_length() - gain, order, superstring_of_permutation(d, order))


def brute_force_scs(d: Dataset) -> ExactResult:
    if len(d) > BRUTE_FORCE_CAP:
        raise ValueError(f"brute force is limited to {BRUTE_FORCE_CAP} strings, got {len(d)}")
    ov = d.overlap_matrix()
    best = None
    for perm in itertools.permutations(range(len(d))):
        gain = sum(ov[a][b] for a, b in zip(perm, perm[1:]))
        if best is None or gain > best[0]:
            best = (gain, perm)
    order = list(best[1])
    return ExactResult(d.total_length() - best[0], order, superstring_of_permutation(d, order))


def exact_scs_sharp(d: Dataset, important: str, cap: int = DEFAULT_CAP) -> ExactResult:
    """Fewest occurrences of ``important``; ties go to the shorter superstring.

    ``length`` is the important-symbol count of the returned superstring.
    """
    _check_cap(d, cap)
    strings = d.strings
    plain = d.overlap_matrix()
    sharp = [[strings[j].count(important, 0, plain[i][j]) for j in range(len(d))]
             for i in range(len(d))]
    # every plain gain fits below the scale, so count gains dominate
    scale = d.total_length() + 1
    weights = [[sharp[i][j] * scale + plain[i][j] for j in range(len(d))]
               for i in range(len(d))]
    _, order = kernels.max_overlap_path(weights)
    text = superstring_of_permutation(d, order)
    return ExactResult(text.count(important), order, text)


def approx_ratio(algorithm_length: int, opt_length: int) -> Fraction:
    if opt_length <= 0:
        raise ValueError("undefined ratio: optimum is zero")
    return Fraction(algorithm_length, opt_length)
