import itertools

import pytest
from hypothesis import given, strategies as st

from consecmobius.perm import (InvalidInput, NotContained, affix_pattern, format_perm,
                               is_bifix, is_monotone, is_monotone_alternating,
                               occurrences, parse_perm, standardize, tails, trim)


def perms(max_n=9):
    return st.integers(1, max_n).flatmap(
        lambda n: st.permutations(range(1, n + 1)).map(tuple))


def scan_occurrences(p, t):
    """Reference scan: standardize every window."""
    k = len(p)
    return [i + 1 for i in range(len(t) - k + 1) if standardize(t[i:i + k]) == tuple(p)]


# --- standardize ---------------------------------------------------------

@pytest.mark.parametrize("s, expected", [
    ((4, 7, 3, 1), (3, 4, 2, 1)),
    ((6, 8, 4, 2), (3, 4, 2, 1)),
    ((1, 2, 3), (1, 2, 3)),
])
def test_standardize_examples(s, expected):
    assert standardize(s) == expected


@pytest.mark.parametrize("bad", [(), (1, 1), (3, 5, 3)])
def test_standardize_rejects(bad):
    with pytest.raises(InvalidInput):
        standardize(bad)


@given(st.lists(st.integers(-1000, 1000), min_size=1, max_size=12, unique=True))
def test_standardize_idempotent(s):
    assert standardize(standardize(s)) == standardize(s)


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=12, unique=True),
       st.integers(1, 5), st.integers(-20, 20))
def test_standardize_invariant_under_increasing_maps(s, scale, shift):
    assert standardize([scale * v ** 3 + shift for v in s]) == standardize(s)


# --- parsing -------------------------------------------------------------

def test_parse_forms():
    assert parse_perm("231") == (2, 3, 1)
    assert parse_perm("2,5,7,1,4,8,9,3,6,10") == (2, 5, 7, 1, 4, 8, 9, 3, 6, 10)
    assert format_perm((2, 3, 1)) == "2,3,1"


@pytest.mark.parametrize("text", ["10", "", "1,1", "12a", "1,3", "1234567891"])
def test_parse_rejects(text):
    with pytest.raises(InvalidInput):
        parse_perm(text)


@given(perms(14))
def test_parse_format_roundtrip(p):
    assert parse_perm(format_perm(p)) == p


# --- occurrences and tails ---------------------------------------------

def test_occurrences_examples():
    assert occurrences((2, 3, 1), parse_perm("563724891")) == [1, 3, 7]
    assert occurrences((2, 3, 1), parse_perm("253641")) == []
    t = parse_perm("68513427")
    assert occurrences((1,), t) == list(range(1, 9))
    assert occurrences(t, (1, 2)) == []


@given(perms(4), perms(10))
def test_occurrences_match_window_scan(p, t):
    assert occurrences(p, t) == scan_occurrences(p, t)


@given(perms(6), st.integers(20, 120), st.randoms(use_true_random=False))
def test_occurrences_vectorized_path(p, n, rnd):
    t = list(range(1, n + 1))
    rnd.shuffle(t)
    assert occurrences(p, t) == scan_occurrences(p, t)


def test_tails_examples():
    assert scan_occurrences((1, 2, 3), parse_perm("68513427")) == [4]
    tp = tails((1, 2, 3), parse_perm("68513427"))
    assert (tp.left, tp.right) == (3, 2)
    tp = tails((3, 2, 1), parse_perm("431825976"))
    assert (tp.left, tp.right) == (0, 0)
    assert tails((2, 1, 3), (2, 1, 3)).total == 0
    with pytest.raises(NotContained):
        tails((2, 3, 1), parse_perm("253641"))


@given(perms(9), st.data())
def test_tails_bound_occurrences(t, data):
    i = data.draw(st.integers(0, len(t) - 1))
    j = data.draw(st.integers(i + 1, len(t)))
    p = standardize(t[i:j])
    tp = tails(p, t)
    occ = scan_occurrences(p, t)
    assert occ[0] == tp.left + 1
    assert occ[-1] + len(p) - 1 == len(t) - tp.right
    assert tp.left + len(p) + tp.right <= len(t)


# --- affixes, trims, bifixes ---------------------------------------------

def test_affix_and_trim_examples():
    t = parse_perm("68513427")
    assert affix_pattern(t, 7, "right") == parse_perm("7513426")
    assert affix_pattern(t, 7, "left") == parse_perm("6751342")
    assert affix_pattern(t, 8, "left") == t == affix_pattern(t, 8, "right")
    assert trim(t, True, False) == parse_perm("7513426")
    assert trim(t, True, True) == parse_perm("651342")
    assert trim(t, False, False) == t


@pytest.mark.parametrize("k", [0, 9])
def test_affix_range(k):
    with pytest.raises(InvalidInput):
        affix_pattern(parse_perm("68513427"), k, "left")
    with pytest.raises(InvalidInput):
        is_bifix(parse_perm("68513427"), k)


def test_trim_to_empty():
    with pytest.raises(InvalidInput):
        trim((2, 1), True, True)
    with pytest.raises(InvalidInput):
        trim((1,), True, False)


def test_bifix_examples():
    assert is_bifix(parse_perm("431825976"), 3)
    assert affix_pattern(parse_perm("431825976"), 3, "left") == (3, 2, 1)
    t = parse_perm("2,5,7,1,4,8,9,3,6,10")
    assert is_bifix(t, 6)
    assert affix_pattern(t, 6, "left") == parse_perm("245136")
    assert is_bifix(t, len(t))


@given(perms(9), st.data())
def test_bifix_is_affix_equality(t, data):
    k = data.draw(st.integers(1, len(t)))
    assert is_bifix(t, k) == (affix_pattern(t, k, "left") == affix_pattern(t, k, "right"))


# --- monotone and alternating ---------------------------------------------

@pytest.mark.parametrize("t, expected", [
    ((1, 2, 3, 4), True), ((4, 3, 2, 1), True), ((1, 3, 2, 4), False), ((1,), True)])
def test_is_monotone(t, expected):
    assert is_monotone(t) is expected


@given(perms(8))
def test_monotone_via_length_two_occurrences(t):
    if len(t) >= 2:
        n = len(t)
        assert is_monotone(t) == (len(occurrences((1, 2), t)) == n - 1
                                  or len(occurrences((2, 1), t)) == n - 1)


def brute_monotone_alternating(t):
    """Direct reading of the definition with explicit comparisons."""
    n = len(t)
    if n <= 2:
        return True
    alt = all((t[i] < t[i + 1]) != (t[i + 1] < t[i + 2]) for i in range(n - 2))

    def mono(s):
        inc = all(s[i] < s[i + 1] for i in range(len(s) - 1))
        dec = all(s[i] > s[i + 1] for i in range(len(s) - 1))
        return inc or dec
    return alt and mono([t[i] for i in range(0, n, 2)]) and mono([t[i] for i in range(1, n, 2)])


def test_monotone_alternating_examples():
    assert is_monotone_alternating(parse_perm("342516"))
    assert not is_monotone_alternating((1, 2, 3, 4))
    assert brute_monotone_alternating((1, 3, 2))
    assert is_monotone_alternating((1, 3, 2))
    assert is_monotone_alternating((1,)) and is_monotone_alternating((2, 1))


def test_monotone_alternating_matches_definition():
    for n in range(1, 8):
        for t in itertools.permutations(range(1, n + 1)):
            assert is_monotone_alternating(t) == brute_monotone_alternating(t), t
