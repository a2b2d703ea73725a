import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from greedyscs.strcore import (Dataset, count_symbol, format_dataset, merge, normalize,
                               overlap, overlap_naive, parse_dataset, read_dataset,
                               superstring_length, superstring_of_permutation, write_dataset)

nonempty = st.text(alphabet="abc", min_size=1, max_size=12)


@pytest.mark.parametrize("s,t,y", [
    ("abc", "bcd", "bc"),
    ("aa", "bb", ""),
    ("cabab", "ababc", "abab"),
])
def test_overlap_examples(backend, s, t, y):
    assert overlap_naive(s, t) == y
    assert overlap(s, t) == y


@pytest.mark.parametrize("s,t,out", [
    ("abc", "bcd", "abcd"),
    ("aa", "bb", "aabb"),
    ("cabab", "ababc", "cababc"),
])
def test_merge_examples(s, t, out):
    assert merge(s, t) == out


@given(nonempty, nonempty)
def test_overlap_is_longest_suffix_prefix(s, t):
    y = overlap(s, t)
    assert s.endswith(y) and t.startswith(y)
    assert len(y) <= min(len(s), len(t))
    for k in range(len(y) + 1, min(len(s), len(t)) + 1):
        assert s[-k:] != t[:k]


@given(nonempty, nonempty, st.sampled_from("abc"))
def test_merge_length_and_symbol_counts(s, t, c):
    m = merge(s, t)
    assert len(m) == len(s) + len(t) - len(overlap(s, t))
    assert m.startswith(s) and m.endswith(t)
    assert count_symbol(m, c) == count_symbol(s, c) + count_symbol(t, c) - count_symbol(overlap(s, t), c)


def test_normalize_examples():
    assert normalize(["abc", "b", "abc"]).strings == ("abc",)
    assert normalize(["ab", "ba"]).strings == ("ab", "ba")
    assert normalize(["cabab", "ababc", "baba", "bab"]).strings == ("cabab", "ababc", "baba")


def test_normalize_rejects_empty():
    with pytest.raises(ValueError, match="empty dataset"):
        normalize([])


@given(st.lists(nonempty, min_size=1, max_size=8))
@settings(max_examples=200)
def test_normalize_idempotent_and_substring_free(raw):
    d = normalize(raw)
    assert normalize(d.strings) == d
    for s in raw:
        assert any(s in t for t in d.strings)
    order = [raw.index(s) for s in d.strings]
    assert order == sorted(order)


def test_dataset_rejects_containment_and_sentinel():
    with pytest.raises(ValueError, match="substring-free"):
        Dataset(("abc", "bc"))
    with pytest.raises(ValueError, match="sentinel"):
        Dataset(("a$b",), sentinel="$")
    assert Dataset(("a$b",), sentinel="$", sentinel_in_use=True).strings == ("a$b",)


@pytest.mark.parametrize("strings,perm,out", [
    (("abc", "bcd"), (0, 1), "abcd"),
    (("cabab", "ababc", "baba"), (0, 2, 1), "cabababc"),
    (("xyz",), (0,), "xyz"),
])
def test_superstring_of_permutation(strings, perm, out):
    assert superstring_of_permutation(Dataset(strings), perm) == out


@pytest.mark.parametrize("strings,perm,length", [
    (("cabab", "ababc", "baba"), (0, 2, 1), 8),
    (("cabab", "ababc", "baba"), (2, 0, 1), 10),
    (("abc",), (0,), 3),
])
def test_superstring_length(strings, perm, length):
    assert superstring_length(Dataset(strings), perm) == length


def test_invalid_permutation():
    d = Dataset(("ab", "ba"))
    with pytest.raises(ValueError):
        superstring_length(d, (0, 0))
    with pytest.raises(ValueError):
        superstring_of_permutation(d, (0,))


@given(st.lists(nonempty, min_size=1, max_size=6), st.randoms())
@settings(max_examples=150)
def test_length_formula_matches_assembled_string(raw, rnd):
    d = normalize(raw)
    perm = list(range(len(d)))
    rnd.shuffle(perm)
    text = superstring_of_permutation(d, perm)
    assert len(text) == superstring_length(d, perm)
    assert all(s in text for s in d.strings)


@pytest.mark.parametrize("s,c,k", [
    ("$a$b$c", "$", 3),
    ("abc", "$", 0),
    ("$$$a$$$$b$$$$c$", "$", 12),
])
def test_count_symbol(s, c, k):
    assert count_symbol(s, c) == k


def test_text_format_round_trip(tmp_path):
    d = Dataset(("$a$b", "$b$c"), sentinel="$", sentinel_in_use=True)
    text = format_dataset(d)
    assert text.splitlines()[0] == "#! sentinel=$ in-use"
    write_dataset(d, tmp_path / "d.txt")
    assert read_dataset(tmp_path / "d.txt") == d
    plain = Dataset(("ab", "ba"))
    assert parse_dataset(format_dataset(plain)) == plain


@pytest.mark.parametrize("text,msg", [
    ("ab\n\nba\n", "blank line"),
    ("#! sentinel=$\na$b\n", "sentinel"),
    ("#! sentinel=$ bogus\nab\n", "unknown directive"),
    ("", "empty dataset"),
    ("abc\nb\n", "substring-free"),
])
def test_text_format_errors(text, msg):
    with pytest.raises(ValueError, match=msg):
        parse_dataset(text)
