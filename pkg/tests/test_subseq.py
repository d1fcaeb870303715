import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stringology.oracles import (
    min_subsequence_of_length,
    palindromic_subseq_longest,
    subsequence_words,
)
from stringology.subseq import (
    count_subsequences,
    distinguisher_candidates,
    distinguishing_subsequence,
    hard_pair,
    lcs,
    longest_palindromic_subsequence,
    max_subs,
    min_sub,
    s_cover_check,
    s_cover_check_naive,
    s_cover_positions_naive,
    s_cover_tables,
    shortest_distinguisher_length,
    shortest_s_cover_naive,
)
from stringology.words import all_subsequences, is_subsequence


def letters(s):
    return [ord(c) - ord("a") for c in s]


def bits(s):
    return [int(c) for c in s]


# ---------------------------------------------------------------- s-covers


def test_s_cover_examples():
    assert s_cover_check(bits("010"), bits("0110110"))
    assert s_cover_check(bits("010"), bits("000011000"))
    assert not s_cover_check(bits("0101"), bits("0110110"))
    assert not s_cover_check(bits("010010"), bits("0110110"))


def test_s_cover_tables_golden():
    t = s_cover_tables(bits("01201"), bits("010210201"))
    assert list(t.first) == [0, 1, 3, 5, 8]
    assert list(t.last) == [2, 4, 6, 7, 8]
    assert list(t.left) == [0, 1, 2, 2, 3, 3, 4, 4, 4]
    assert list(t.right) == [5, 5, 4, 4, 3, 3, 2, 1, 0]
    assert list(t.p) == [1, 2, 1, 3, 2, 4, 3, 4, 5]


def test_s_cover_predicate_components_match_result():
    rng = random.Random(4)
    for _ in range(300):
        n = rng.randint(2, 16)
        y = [rng.randrange(3) for _ in range(n)]
        x = [rng.randrange(3) for _ in range(rng.randint(1, n - 1))]
        t = s_cover_tables(x, y)
        got = s_cover_check(x, y)
        if t is None:
            assert not got
        else:
            psi = all(p > 0 and p + r >= len(x) for p, r in zip(t.p, t.right))
            assert psi == got
        assert got == s_cover_check_naive(x, y)


def test_s_cover_requires_shorter_pattern():
    with pytest.raises(ValueError):
        s_cover_check(bits("01"), bits("01"))


def test_shortest_s_cover_examples():
    assert shortest_s_cover_naive(bits("0110110")) == bits("010")
    assert shortest_s_cover_naive(bits("0000")) == [0]
    assert shortest_s_cover_naive(bits("01")) == bits("01")


def test_shortest_s_cover_candidates_agree_with_fast_check():
    for n in range(2, 11):
        for mask in range(1 << n):
            y = [(mask >> i) & 1 for i in range(n)]
            for cand in sorted(subsequence_words(y), key=lambda c: (len(c), c)):
                if not 1 <= len(cand) < len(y):
                    continue
                assert s_cover_check(cand, y) == s_cover_check_naive(cand, y)


def test_covered_positions_definition():
    # position subsets from the oracle match the check on a worked case
    y = bits("0110110")
    assert s_cover_positions_naive(bits("010"), y) == set(range(7))
    assert 6 not in s_cover_positions_naive(bits("0101"), y)


# ----------------------------------------------------------- distinguishers


def test_distinguisher_worked_examples():
    z = distinguishing_subsequence(letters("ababababab"), letters("ababaababb"))
    assert z == letters("bbbaa")
    z = distinguishing_subsequence(letters("abababababa"), letters("ababaaabbba"))
    assert z == letters("bbbaaa")


def test_distinguisher_candidate_lengths_sum():
    rng = random.Random(6)
    count = 0
    while count < 200:
        n = rng.randint(2, 20)
        x = [rng.randrange(2) for _ in range(n)]
        y = [rng.randrange(2) for _ in range(n)]
        if x == y or x.count(0) != y.count(0):
            continue
        count += 1
        z1, z2 = distinguisher_candidates(x, y)
        assert len(z1) + len(z2) == n + 2


def test_distinguisher_fast_path():
    z = distinguishing_subsequence(letters("aa"), letters("ab"))
    assert len(z) <= 2
    assert is_subsequence(z, letters("aa")) != is_subsequence(z, letters("ab"))


def test_distinguisher_errors():
    with pytest.raises(ValueError):
        distinguishing_subsequence([0, 1], [0, 1])
    with pytest.raises(ValueError):
        distinguishing_subsequence([0], [0, 1])


def test_hard_pairs():
    assert hard_pair(4) == (letters("abab"), letters("baba"))
    assert hard_pair(5) == (letters("ababa"), letters("babaa"))
    for n in range(2, 13):
        x, y = hard_pair(n)
        assert len(x) == len(y) == n and x != y
        assert shortest_distinguisher_length(x, y) == (n + 2) // 2


# ------------------------------------------------------------------ MinSub


def test_min_sub_examples():
    assert min_sub(letters("bbbbbaeeecffddd"), 5) == letters("acddd")
    assert min_sub(letters("baddbccega"), 7) == letters("abccega")
    w = letters("zyxw")
    assert min_sub(w, len(w)) == w
    with pytest.raises(ValueError):
        min_sub([0, 1], 3)


@given(st.lists(st.integers(0, 4), min_size=1, max_size=11), st.data())
@settings(max_examples=150)
def test_min_sub_matches_enumeration(w, data):
    k = data.draw(st.integers(1, len(w)))
    assert tuple(min_sub(w, k)) == min_subsequence_of_length(w, k)


# --------------------------------------------------------------------- LCS


def test_lcs_examples():
    a, b = lcs(letters("abc"), letters("abc"))
    assert a == b == [0, 1, 2]
    a, b = lcs(letters("abc"), letters("cba"))
    assert len(a) == 1
    # a length-4 common subsequence (such as abcd) exists; the maximum is 5,
    # witnessed by the palindrome dcacd
    a, b = lcs(letters("dcabcdba"), letters("dcabcdba")[::-1])
    assert len(a) == 5
    assert is_subsequence(letters("abcd"), letters("dcabcdba"))
    assert is_subsequence(letters("abcd"), letters("dcabcdba")[::-1])


def test_lcs_positions_are_aligned():
    rng = random.Random(8)
    for _ in range(200):
        u = [rng.randrange(3) for _ in range(rng.randint(0, 25))]
        v = [rng.randrange(3) for _ in range(rng.randint(0, 25))]
        a, b = lcs(u, v)
        assert [u[i] for i in a] == [v[j] for j in b]
        assert all(x < y for x, y in zip(a, a[1:]))
        assert all(x < y for x, y in zip(b, b[1:]))


def test_lcs_is_maximal_small():
    rng = random.Random(10)
    for _ in range(60):
        u = [rng.randrange(2) for _ in range(rng.randint(1, 9))]
        v = [rng.randrange(2) for _ in range(rng.randint(1, 9))]
        a, _ = lcs(u, v)
        best = max(
            (len(s) for s in subsequence_words(u) if s in subsequence_words(v)),
            default=0,
        )
        assert len(a) == best


# --------------------------------------------------------------------- LPS


def test_lps_examples():
    # abba and dccd are palindromic subsequences, but dcacd beats them
    got = longest_palindromic_subsequence(letters("dcabcdba"))
    assert len(got) == palindromic_subseq_longest(letters("dcabcdba")) == 5
    assert got == got[::-1]
    assert is_subsequence(got, letters("dcabcdba"))
    assert is_subsequence(letters("abba"), letters("dcabcdba"))
    assert is_subsequence(letters("dccd"), letters("dcabcdba"))
    assert longest_palindromic_subsequence(letters("aaaa")) == letters("aaaa")


def test_lps_matches_exhaustive():
    for n in range(0, 13):
        rng = random.Random(100 + n)
        for _ in range(40):
            w = [rng.randrange(2) for _ in range(n)]
            got = longest_palindromic_subsequence(w)
            assert got == got[::-1]
            assert is_subsequence(got, w)
            assert len(got) == palindromic_subseq_longest(w)


# ---------------------------------------------------------------- counting


def test_count_subsequences_examples():
    assert count_subsequences(letters("abab")) == 12
    assert count_subsequences([]) == 1
    assert max_subs(4) == 12
    assert max_subs(0) == 1


def test_counting_vs_enumeration_and_max():
    for n in range(0, 13):
        best = 1
        for mask in range(1 << n):
            w = [(mask >> i) & 1 for i in range(n)]
            c = count_subsequences(w)
            assert c == len(all_subsequences(w))
            best = max(best, c)
        assert best == max_subs(n)


def test_alternating_words_attain_max():
    rng = random.Random(14)
    for _ in range(2000):
        n = rng.randint(0, 40)
        w = [rng.randrange(2) for _ in range(n)]
        assert count_subsequences(w) <= max_subs(n)
    for n in range(0, 30):
        w = [i % 2 for i in range(n)]
        assert count_subsequences(w) == max_subs(n)
