import pytest

from greedyscs.gen import LETTERS, random_dataset, tie_rich_dataset, worst_case_family
from greedyscs.greedy import MASK64, builtin_policies, run_greedy
from greedyscs.oracle import brute_force_scs
from greedyscs.strcore import normalize


def test_worst_case_family_values():
    assert worst_case_family(2).strings == ("cabab", "ababc", "baba")
    assert worst_case_family(1).strings == ("cab", "abc", "ba")
    d = worst_case_family(2)
    assert run_greedy(d).length == 10
    assert brute_force_scs(d).length == 8
    with pytest.raises(ValueError):
        worst_case_family(0)


def reference_random(seed, n, len_min, len_max, alphabet_size):
    """Independent re-implementation of the documented generator recurrence."""
    state = seed
    out = []

    def nxt():
        nonlocal state
        state = (state + 0x9E3779B97F4A7C15) & MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    for _ in range(n):
        k = len_min + nxt() % (len_max - len_min + 1)
        out.append("".join(LETTERS[nxt() % alphabet_size] for _ in range(k)))
    return normalize(out).strings


def test_random_dataset_is_reproducible():
    d = random_dataset(1, 5, 3, 6, 2)
    assert d.strings == ("babb", "bbaaaa", "abbb")
    assert d.strings == reference_random(1, 5, 3, 6, 2)
    for seed in range(20):
        assert random_dataset(seed, 6, 2, 9, 3).strings == reference_random(seed, 6, 2, 9, 3)


def test_random_dataset_edge_cases():
    assert len(random_dataset(3, 1, 2, 5, 3)) == 1
    for seed in range(10):
        assert len(random_dataset(seed, 6, 2, 5, 1)) == 1
    for bad in [(0, 0, 1, 2, 2), (0, 3, 0, 2, 2), (0, 3, 4, 2, 2), (0, 3, 1, 2, 27)]:
        with pytest.raises(ValueError):
            random_dataset(*bad)


@pytest.mark.parametrize("seed", range(10))
@pytest.mark.parametrize("n,k", [(4, 1), (6, 2), (8, 3)])
def test_tie_rich_dataset(seed, n, k):
    d = tie_rich_dataset(seed, n, k)
    assert len(d) == n
    ov = d.overlap_matrix()
    top = max(max(row) for row in ov)
    assert top == k
    assert sum(row.count(k) for row in ov) == n // 2
    first = {run_greedy(d, p).trace.steps[0][:2] for p in builtin_policies(seed)}
    assert len(first) >= 2


def test_tie_rich_errors():
    with pytest.raises(ValueError, match="empty overlaps"):
        tie_rich_dataset(0, 4, 0)
    with pytest.raises(ValueError):
        tie_rich_dataset(0, 5, 1)
    with pytest.raises(ValueError, match="exhausted"):
        tie_rich_dataset(0, 28, 1)


def test_family_closed_forms():
    ratios = []
    for n in range(1, 7):
        d = worst_case_family(n)
        assert {run_greedy(d, p).length for p in builtin_policies(n)} == {4 * n + 2}
        assert brute_force_scs(d).length == 2 * n + 4
        ratios.append((4 * n + 2) / (2 * n + 4))
    assert ratios == sorted(set(ratios)) and ratios[-1] < 2
