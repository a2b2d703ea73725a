"""Dataset generators: the classic greedy worst case, random and tie-rich inputs.

Random choices come from :class:`~greedyscs.greedy.SplitMix64` so outputs are
reproducible on any platform.
"""
from __future__ import annotations

import logging
import string

from .greedy import SplitMix64
from .strcore import Dataset, dropped_by_normalize, normalize

log = logging.getLogger(__name__)

LETTERS = string.ascii_lowercase
TIE_ALPHABET = string.ascii_lowercase + string.ascii_uppercase


def worst_case_family(n: int) -> Dataset:
    """``{c(ab)^n, (ab)^n c, (ba)^n}``; greedy builds 4n + 2 symbols, the optimum 2n + 4."""
    if n < 1:
        raise ValueError("n must be positive")
    return Dataset(("c" + "ab" * n, "ab" * n + "c", "ba" * n))


def _normalized(raw: list[str]) -> Dataset:
    d = normalize(raw)
    dropped = dropped_by_normalize(raw, d)
    if dropped:
        log.info("normalize dropped %d of %d strings: %r", len(dropped), len(raw), dropped)
    return d


def random_dataset(seed: int, n: int, len_min: int, len_max: int,
                   alphabet_size: int) -> Dataset:
    """``n`` uniform strings over the first ``alphabet_size`` letters, then normalized.

    Each string draws its length as ``len_min + next() % (len_max - len_min + 1)``
    and each symbol as ``LETTERS[next() % alphabet_size]``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if not 1 <= alphabet_size <= len(LETTERS):
        raise ValueError(f"alphabet size must be in 1..{len(LETTERS)}")
    if not 1 <= len_min <= len_max:
        raise ValueError("need 1 <= len_min <= len_max")
    rng = SplitMix64(seed)
    span = len_max - len_min + 1
    raw = []
    for _ in range(n):
        k = len_min + rng.below(span)
        raw.append("".join(LETTERS[rng.below(alphabet_size)] for _ in range(k)))
    return _normalized(raw)


def tie_rich_dataset(seed: int, n: int, overlap_len: int) -> Dataset:
    """``n / 2`` disjoint pairs ``x w``, ``w y`` whose overlaps all have length ``overlap_len``.

    Each pair owns four letters: ``x``, ``y`` and two letters for ``w``. Every
    pair therefore ties at the first greedy step and no cross-pair overlap exists.
    """
    if n < 4 or n % 2:
        raise ValueError("n must be an even number >= 4")
    if overlap_len < 1:
        raise ValueError("overlap_len must be positive; empty overlaps are not ties")
    pairs = n // 2
    if 4 * pairs > len(TIE_ALPHABET):
        raise ValueError(f"alphabet exhausted: {pairs} pairs need {4 * pairs} letters")
    rng = SplitMix64(seed)
    raw = []
    for p in range(pairs):
        x, y, u, v = TIE_ALPHABET[4 * p: 4 * p + 4]
        w = "".join((u, v)[rng.below(2)] for _ in range(overlap_len))
        raw += [x + w, w + y]
    # shuffle so ties are not aligned with index order
    for i in range(len(raw) - 1, 0, -1):
        j = rng.below(i + 1)
        raw[i], raw[j] = raw[j], raw[i]
    return _normalized(raw)
