"""String primitives: overlaps, merges, datasets and permutation superstrings.

Strings are plain ``str`` values and symbols are one-character strings, so
the alphabet is any set of unicode scalars. Indices into a dataset are
0-based throughout the package.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import kernels

DIRECTIVE = "#!"


def overlap_len(s: str, t: str) -> int:
    return kernels.overlap_len(s, t)


def overlap(s: str, t: str) -> str:
    """Longest ``y`` with ``s = xy`` and ``t = yz``; possibly empty."""
    return t[: kernels.overlap_len(s, t)]


def overlap_naive(s: str, t: str) -> str:
    """Quadratic reference for :func:`overlap`, used by the tests."""
    for k in range(min(len(s), len(t)), 0, -1):
        if s.endswith(t[:k]):
            return t[:k]
    return ""


def merge(s: str, t: str) -> str:
    return s + t[kernels.overlap_len(s, t):]


def count_symbol(s: str, c: str) -> int:
    return s.count(c)


def is_substring_free(strings: Sequence[str]) -> bool:
    for i, s in enumerate(strings):
        for j, t in enumerate(strings):
            if i != j and s in t:
                return False
    return True


@dataclass(frozen=True)
class Dataset:
    """A substring-free, duplicate-free list of non-empty strings.

    ``sentinel`` optionally names a reserved symbol. While
    ``sentinel_in_use`` is false it must not occur in any string; transformed
    datasets set the flag because they are built from it.
    """

    strings: tuple[str, ...]
    sentinel: str | None = None
    sentinel_in_use: bool = False

    def __post_init__(self):
        object.__setattr__(self, "strings", tuple(self.strings))
        if not self.strings:
            raise ValueError("empty dataset")
        if any(not s for s in self.strings):
            raise ValueError("dataset strings must be non-empty")
        if self.sentinel is not None:
            if len(self.sentinel) != 1:
                raise ValueError("sentinel must be a single symbol")
            if not self.sentinel_in_use and any(self.sentinel in s for s in self.strings):
                raise ValueError(f"sentinel {self.sentinel!r} occurs in the dataset")
        if not is_substring_free(self.strings):
            raise ValueError("dataset is not substring-free")

    def __len__(self):
        return len(self.strings)

    def __iter__(self):
        return iter(self.strings)

    def __getitem__(self, i):
        return self.strings[i]

    @property
    def alphabet(self) -> frozenset[str]:
        return frozenset("".join(self.strings))

    def total_length(self) -> int:
        return sum(map(len, self.strings))

    def overlap_matrix(self) -> list[list[int]]:
        return kernels.overlap_matrix(list(self.strings))


def normalize(raw: Iterable[str], sentinel: str | None = None,
              sentinel_in_use: bool = False) -> Dataset:
    """Drop every string contained in another; the first duplicate survives."""
    raw = list(raw)
    if not raw:
        raise ValueError("empty dataset")
    if any(not s for s in raw):
        raise ValueError("dataset strings must be non-empty")
    keep = []
    for i, s in enumerate(raw):
        dropped = False
        for j, t in enumerate(raw):
            if i == j:
                continue
            if s == t:
                if j < i:
                    dropped = True
                    break
            elif s in t:
                dropped = True
                break
        if not dropped:
            keep.append(s)
    return Dataset(tuple(keep), sentinel, sentinel_in_use)


def dropped_by_normalize(raw: Sequence[str], d: Dataset) -> list[str]:
    """Strings of ``raw`` that did not survive into ``d`` (with multiplicity)."""
    left = list(d.strings)
    out = []
    for s in raw:
        if s in left:
            left.remove(s)
        else:
            out.append(s)
    return out


def _check_permutation(n: int, perm: Sequence[int]) -> None:
    if sorted(perm) != list(range(n)):
        raise ValueError(f"not a permutation of 0..{n - 1}: {list(perm)!r}")


def superstring_of_permutation(d: Dataset | Sequence[str], perm: Sequence[int]) -> str:
    strings = d.strings if isinstance(d, Dataset) else tuple(d)
    _check_permutation(len(strings), perm)
    out = strings[perm[0]]
    for a, b in zip(perm, perm[1:]):
        out += strings[b][kernels.overlap_len(strings[a], strings[b]):]
    return out


def superstring_length(d: Dataset | Sequence[str], perm: Sequence[int]) -> int:
    """Total length minus the overlaps of consecutive strings in ``perm``."""
    strings = d.strings if isinstance(d, Dataset) else tuple(d)
    _check_permutation(len(strings), perm)
    total = sum(len(s) for s in strings)
    return total - sum(kernels.overlap_len(strings[a], strings[b])
                       for a, b in zip(perm, perm[1:]))


def parse_dataset(text: str) -> Dataset:
    """Parse the line-oriented dataset format.

    An optional first line ``#! sentinel=<c>`` reserves a symbol;
    ``#! sentinel=<c> in-use`` marks a transformed dataset that may contain it.
    """
    lines = text.splitlines()
    sentinel = None
    in_use = False
    if lines and lines[0].startswith(DIRECTIVE):
        fields = lines[0][len(DIRECTIVE):].split()
        lines = lines[1:]
        for f in fields:
            if f.startswith("sentinel="):
                sentinel = f[len("sentinel="):]
            elif f == "in-use":
                in_use = True
            else:
                raise ValueError(f"unknown directive field {f!r}")
        if sentinel is None or len(sentinel) != 1:
            raise ValueError("directive needs sentinel=<single symbol>")
    while lines and lines[-1] == "":
        lines.pop()
    for k, line in enumerate(lines, 1):
        if not line:
            raise ValueError(f"blank line {k} in dataset")
    return Dataset(tuple(lines), sentinel, in_use)


def format_dataset(d: Dataset) -> str:
    head = ""
    if d.sentinel is not None:
        head = f"{DIRECTIVE} sentinel={d.sentinel}" + (" in-use" if d.sentinel_in_use else "") + "\n"
    return head + "".join(s + "\n" for s in d.strings)


def read_dataset(path) -> Dataset:
    with open(path, encoding="utf-8") as f:
        return parse_dataset(f.read())


def write_dataset(d: Dataset, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(format_dataset(d))
