"""Headless property suites: every check prints one pass/fail line.

The fast level re-verifies the worked examples and small oracle sweeps; the
full level runs the exhaustive cross-checks.
"""

from __future__ import annotations

import math
import random
import sys
from fractions import Fraction
from typing import Callable

from . import oracles
from .avoidance import (
    fib_factor_test, grasshopper_squarefree_word, is_square_free,
    list_squarefree_random, tm_factor_test, unbordered_counts,
    unbordered_weighted,
)
from .cartesian import ct_match, ct_match_naive
from .codec import (
    compress_pairs, entropy, hamming_build, hamming_correct, hamming_encode,
    huffman_cost, kraft_sum, pairing_partition,
)
from .freeband import band_signature, idempotent_equivalent
from .gf2 import Gf2Poly, LfsrSpec, debruijn_two_cycles, is_primitive, lfsr_gen
from .patterns import (
    embed_permutation, greedy_embedding, is_universal_shape_word, jumps_total,
    superpattern_word, universal_shape_word,
)
from .permgen import KINDS, run_generator
from .regularities import (
    anticover_is_valid, is_attractor, rle_shortest_cover, two_anticover,
)
from .rings import is_ring_word, ring_word
from .rle import rle_decode, rle_encode
from .subcount import sub_table
from .subseq import (
    count_subsequences, distinguishing_subsequence, hard_pair, max_subs,
    min_sub, s_cover_check, s_cover_check_naive,
    shortest_distinguisher_length,
)
from .twosat import TwoSatFormula, brute_force_sat, check_assignment, two_sat_solve
from .wildcard import wildcard_index, wildcard_search
from .words import all_factors, all_subsequences, bar, fibonacci_word, thue_morse

CHECKS: list[tuple[str, str, Callable[[], None]]] = []


def check(name: str, level: str):
    def deco(fn):
        CHECKS.append((name, level, fn))
        return fn
    return deco


def _bin_words(max_len: int, min_len: int = 1):
    for n in range(min_len, max_len + 1):
        for mask in range(1 << n):
            yield [(mask >> i) & 1 for i in range(n)]


# ------------------------------------------------------------------- fast


@check("rle round-trip, exhaustive length <= 16", "fast")
def _rle_roundtrip():
    for n in range(1, 17):
        for mask in range(1 << (n - 1)):
            w = [1] + [(mask >> i) & 1 for i in range(n - 1)]
            assert rle_decode(rle_encode(w)) == w


@check("morphic word recurrences", "fast")
def _morphic():
    for k in range(0, 13):
        assert thue_morse(k + 1) == thue_morse(k) + bar(thue_morse(k))
    fibs = [0, 1]
    while len(fibs) < 25:
        fibs.append(fibs[-1] + fibs[-2])
    for k in range(0, 21):
        assert len(fibonacci_word(k)) == fibs[k + 2]


@check("attractor constructions verify", "fast")
def _attractors():
    for k in range(4, 8):
        assert is_attractor(thue_morse(k), {1 << (k - 1), 1 << (k - 2),
                                            (1 << (k - 1)) + (1 << (k - 2)),
                                            (1 << (k - 2)) + (1 << (k - 3))})
    for k in range(2, 11):
        prev = len(fibonacci_word(k - 1))
        assert is_attractor(fibonacci_word(k), {prev - 2, prev - 1})
    assert not is_attractor(fibonacci_word(5), {8, 9})


@check("2-SAT agrees with truth tables (200 formulas)", "fast")
def _twosat():
    rng = random.Random(11)
    for _ in range(200):
        nv = rng.randint(1, 12)
        clauses = tuple(
            ((rng.randrange(nv), rng.random() < 0.5),
             (rng.randrange(nv), rng.random() < 0.5))
            for _ in range(rng.randint(0, 24))
        )
        f = TwoSatFormula(nv, clauses)
        got = two_sat_solve(f)
        want = brute_force_sat(f)
        assert (got is None) == (want is None)
        if got is not None:
            assert check_assignment(f, got)


@check("anticover outputs pass the validity checker", "fast")
def _anticover_valid():
    rng = random.Random(5)
    for _ in range(400):
        n = rng.randint(2, 40)
        x = [rng.randrange(4) for _ in range(n)]
        cover = two_anticover(x)
        if cover is not None:
            assert anticover_is_valid(x, cover)
    assert two_anticover([0, 1, 0, 0, 1, 0, 1, 1, 0, 0, 1]) is None  # abaababbaab
    assert two_anticover([0, 1, 0, 0, 2, 1, 0, 2, 2, 0]) is not None  # abaacbacca


@check("Huffman sandwich and exact Kraft equality (10^4 draws)", "fast")
def _huffman():
    rng = random.Random(17)
    for _ in range(10_000):
        n = rng.randint(1, 64)
        raw = [rng.random() + 1e-9 for _ in range(n)]
        s = sum(raw)
        p = [w / s for w in raw]
        cost, depths = huffman_cost(p)
        assert kraft_sum(depths) == Fraction(1)
        h = entropy(p)
        assert h - 1e-9 <= cost <= h + 1 + 1e-9


@check("Hamming distance >= 3 and full 1-error sweep (r=3,4)", "fast")
def _hamming():
    code = hamming_build(3)
    words = [hamming_encode(code, [(m >> i) & 1 for i in range(4)]) for m in range(16)]
    for i in range(16):
        for j in range(i + 1, 16):
            assert sum(a != b for a, b in zip(words[i], words[j])) >= 3
    for c in words:
        for pos in range(7):
            y = list(c)
            y[pos] ^= 1
            fixed, err = hamming_correct(code, y)
            assert fixed == c and err == pos
    code4 = hamming_build(4)
    for m in range(1 << 11):
        c = hamming_encode(code4, [(m >> i) & 1 for i in range(11)])
        for pos in range(15):
            y = list(c)
            y[pos] ^= 1
            fixed, err = hamming_correct(code4, y)
            assert fixed == c and err == pos


@check("pairing bound |compressed| <= 3/4 |x| (10^4 draws)", "fast")
def _pairing():
    rng = random.Random(23)
    for _ in range(10_000):
        n = rng.randint(2, 60)
        x = [rng.randrange(6)]
        while len(x) < n:
            c = rng.randrange(6)
            if c != x[-1]:
                x.append(c)
        part = pairing_partition(x)
        out = compress_pairs(x, part)
        assert 4 * len(out) <= 3 * len(x), (x, out)


@check("generator completeness, every kind, n <= 6", "fast")
def _generators_fast():
    for kind in KINDS:
        for n in range(2, 7):
            perms = run_generator(kind, n)
            assert len(perms) == math.factorial(n)
            assert len(set(perms)) == math.factorial(n)


@check("superpattern embeds 2000 random permutations (n <= 24)", "fast")
def _superpattern_fast():
    rng = random.Random(31)
    for _ in range(2000):
        n = rng.randint(1, 24)
        pi = list(range(1, n + 1))
        rng.shuffle(pi)
        pos = embed_permutation(pi)
        word = superpattern_word(n)
        sub = [word[p] for p in pos]
        assert all(p2 > p1 for p1, p2 in zip(pos, pos[1:]))
        for i in range(n):
            for j in range(i + 1, n):
                assert (pi[i] < pi[j]) == (sub[i] < sub[j])


@check("jump identity Jumps(pi) + Jumps(pi+) = 2n+1 (samples)", "fast")
def _jumps_fast():
    rng = random.Random(37)
    for _ in range(2000):
        n = rng.randint(1, 16)
        pi = list(range(1, n + 1))
        rng.shuffle(pi)
        assert jumps_total(pi, n) + jumps_total([v + 1 for v in pi], n) == 2 * n + 1


@check("ring words for all k <= 6 and admissible n", "fast")
def _rings():
    for k in range(1, 7):
        for n in range(k, (1 << k) + 1):
            w = ring_word(n, k)
            assert len(w) == n and is_ring_word(w, k)


@check("LFSR windows distinct iff primitive, degrees <= 8", "fast")
def _lfsr_iff():
    for n in range(2, 9):
        for mask in range(1, 1 << n):
            taps = tuple((mask >> i) & 1 for i in range(n))
            spec = LfsrSpec(taps)
            windows = lfsr_gen(spec)
            distinct = len({tuple(w) for w in windows}) == len(windows)
            poly = Gf2Poly((1 << n) | mask)
            assert distinct == is_primitive(poly)


@check("two-cycle decomposition orthogonal for listed trinomials", "fast")
def _two_cycles():
    from .rings import cyclic_factors

    for exps in ([3, 1, 0], [4, 1, 0], [5, 2, 0], [6, 1, 0], [7, 1, 0],
                 [9, 4, 0], [10, 3, 0]):
        p = Gf2Poly.from_exponents(exps)
        n = p.degree
        w, u = debruijn_two_cycles(p)
        assert u == [1 - b for b in w]
        assert len(cyclic_factors(w, n)) == (1 << n) - 1
        assert len(cyclic_factors(u, n)) == (1 << n) - 1
        assert not (cyclic_factors(w, n + 1) & cyclic_factors(u, n + 1))
        ones = sum((p.bits >> i) & 1 for i in range(n))
        assert ones % 2 == 0  # tap weight is even for primitive polynomials


@check("list-constrained square-free randomized driver", "fast")
def _listsq():
    rng = random.Random(41)
    for trial in range(30):
        n = rng.randint(1, 12)
        lists = [rng.sample(range(8), 5) for _ in range(n)]
        word, _ = list_squarefree_random(lists, seed=trial)
        assert is_square_free(word)
        assert all(s in li for s, li in zip(word, lists))


@check("free band: equivalence laws and square collapse (samples)", "fast")
def _freeband_fast():
    rng = random.Random(43)
    for _ in range(400):
        n = rng.randint(1, 12)
        x = [rng.randrange(3) for _ in range(n)]
        i = rng.randint(0, len(x))
        j = rng.randint(i, len(x))
        collapsed = x[:i] + x[i:j] + x[i:j] + x[j:]
        assert idempotent_equivalent(collapsed, x) == idempotent_equivalent(x, collapsed)
        assert idempotent_equivalent(collapsed, x)
        assert idempotent_equivalent(x, x)


@check("wildcard index: definition of side tries (words <= 64)", "fast")
def _wildcard_def():
    rng = random.Random(47)
    for _ in range(40):
        n = rng.randint(1, 64)
        w = [rng.randrange(2) for _ in range(n)]
        idx = wildcard_index(w)
        tree = idx.tree
        for v, trie in idx.side.items():
            heavy = idx.heavy[v]
            want = set()
            for sym, child in tree.children[v].items():
                if sym == heavy:
                    continue
                for label in tree.leaves_below(child):
                    want.add(tuple(tree.text[label + tree.depth[v] + 1:]))
            assert trie.strings() == want


@check("wildcard search vs naive scan (random texts)", "fast")
def _wildcard_search():
    from .words import HOLE

    rng = random.Random(53)
    for _ in range(30):
        n = rng.randint(2, 300)
        w = [rng.randrange(2) for _ in range(n)]
        idx = wildcard_index(w)
        for _ in range(60):
            m = rng.randint(1, 6)
            pat = [rng.randrange(2) for _ in range(m)]
            if rng.random() < 0.8:
                pat[rng.randrange(m)] = HOLE
            assert wildcard_search(idx, pat) == bool(oracles.approx_occurs(pat, w))


@check("cartesian matching vs naive windows (random)", "fast")
def _ct_fast():
    rng = random.Random(59)
    for _ in range(150):
        m = rng.randint(1, 10)
        x = [rng.randrange(6) for _ in range(m)]
        y = [rng.randrange(6) for _ in range(rng.randint(m, 120))]
        assert ct_match(x, y) == ct_match_naive(x, y)


@check("sub-table equals the factor-counting oracle (random)", "fast")
def _subtable_fast():
    from .subcount import dif_table_marking, dif_table_minleaf
    from .suffixtree import suffix_tree

    rng = random.Random(61)
    for _ in range(120):
        n = rng.randint(1, 60)
        x = [rng.randrange(3) for _ in range(n)]
        sub, dif = sub_table(x)
        tree = suffix_tree(x)
        assert dif == dif_table_minleaf(tree)
        full = x + [tree.sentinel]
        assert sub[-1] == len(all_factors(full))
        assert all(a <= b for a, b in zip(sub, sub[1:]))


@check("counting: subsequence DP vs enumeration (length <= 12)", "fast")
def _counting_fast():
    for w in _bin_words(12):
        assert count_subsequences(w) == len(all_subsequences(w))
    for n in range(0, 13):
        best = max(count_subsequences(w) for w in _bin_words(n, n)) if n else 1
        assert best == max_subs(n)


@check("unbordered recurrences vs enumeration (length <= 14)", "fast")
def _unbordered_fast():
    u, v, t = unbordered_counts(14)
    cu = [0] * 15
    cv = [0] * 15
    ct_ = [0] * 15
    cu[0] = cv[0] = ct_[0] = 1
    for w in _bin_words(14):
        n = len(w)
        cu[n] += not oracles.is_bordered(w)
        cv[n] += not oracles.has_even_palindromic_prefix(w)
        ct_[n] += not oracles.has_odd_palindromic_prefix(w)
    assert u == cu and v == cv and t == ct_
    for n in range(0, 15):
        assert sum(unbordered_weighted(n, k) for k in range(n + 1)) == u[n]


@check("grasshopper square-free outputs (n <= 20, jump DP oracle)", "fast")
def _grasshopper_fast():
    for n in range(1, 21):
        w = grasshopper_squarefree_word(n)
        assert not oracles.grasshopper_square_exists(w)
        assert all((s % 2 == 1) == (i % 2 == 1) for i, s in enumerate(w))


@check("s-cover check vs coverage oracle (exhaustive small)", "fast")
def _scover_fast():
    for y in _bin_words(9, 2):
        for x in _bin_words(len(y) - 1):
            assert s_cover_check(x, y) == s_cover_check_naive(x, y)


@check("minsub equals exhaustive minimum (length <= 10)", "fast")
def _minsub_fast():
    for w in _bin_words(10):
        subs = all_subsequences(w)
        for k in range(1, len(w) + 1):
            want = min(s for s in subs if len(s) == k)
            assert tuple(min_sub(w, k)) == want


@check("distinguisher bound and membership (exhaustive n <= 8)", "fast")
def _distinguish_fast():
    from .words import is_subsequence

    for n in range(1, 9):
        for xm in range(1 << n):
            x = [(xm >> i) & 1 for i in range(n)]
            for ym in range(xm + 1, 1 << n):
                y = [(ym >> i) & 1 for i in range(n)]
                z = distinguishing_subsequence(x, y)
                assert len(z) <= (n + 2) // 2
                assert is_subsequence(z, x) != is_subsequence(z, y)
    for n in range(2, 13):
        x, y = hard_pair(n)
        assert shortest_distinguisher_length(x, y) == (n + 2) // 2


@check("factor tests vs direct scans (length <= 11)", "fast")
def _factor_tests_fast():
    tm = bytes(thue_morse(16))
    fib = bytes(fibonacci_word(20))
    for w in _bin_words(11):
        b = bytes(w)
        assert tm_factor_test(w) == (tm.find(b) >= 0)
        assert fib_factor_test(w) == (fib.find(b) >= 0)


@check("rle cover vs naive cover (exhaustive length <= 13)", "fast")
def _rle_cover_fast():
    for n in range(1, 14):
        for mask in range(1 << (n - 1)):
            w = [1] + [(mask >> i) & 1 for i in range(n - 1)]
            assert rle_shortest_cover(rle_encode(w)) == oracles.naive_shortest_cover(w)


# ------------------------------------------------------------------- full


@check("s-cover check vs coverage oracle (all |y| <= 14, |x| <= 4)", "full")
def _scover_full():
    small_x = [list(x) for x in _bin_words(4)]
    for y in _bin_words(14, 2):
        half = y[:len(y) // 2]
        cands = small_x + ([half] if 0 < len(half) < len(y) else [])
        for x in cands:
            if len(x) >= len(y):
                continue
            assert s_cover_check(x, y) == s_cover_check_naive(x, y)


@check("anticover vs exhaustive subset search (all |x| <= 14)", "full")
def _anticover_full():
    for x in _bin_words(14, 2):
        got = two_anticover(x)
        want = oracles.anticover_exists_bruteforce(x)
        assert (got is not None) == want
        if got is not None:
            assert anticover_is_valid(x, got)


@check("minsub / counting vs enumeration (length <= 14)", "full")
def _minsub_full():
    rng = random.Random(67)
    for w in _bin_words(14, 13):
        assert count_subsequences(w) == len(all_subsequences(w))
        k = rng.randint(1, len(w))
        want = min(s for s in all_subsequences(w) if len(s) == k)
        assert tuple(min_sub(w, k)) == want


@check("LPS length vs exhaustive palindromic search (length <= 15)", "full")
def _lps_full():
    from .subseq import longest_palindromic_subsequence

    rng = random.Random(71)
    words = [list(w) for w in _bin_words(12, 11)]
    words += [[rng.randrange(2) for _ in range(n)]
              for n in (13, 14, 15) for _ in range(40)]
    for w in words:
        got = longest_palindromic_subsequence(w)
        assert got == got[::-1]
        from .words import is_subsequence
        assert is_subsequence(got, w)
        assert len(got) == oracles.palindromic_subseq_longest(w)


@check("distinguisher length bound (all pairs n <= 10, samples to 12)", "full")
def _distinguish_full():
    from .words import is_subsequence

    for n in range(9, 11):
        for xm in range(1 << n):
            x = [(xm >> i) & 1 for i in range(n)]
            for ym in range(xm + 1, 1 << n):
                y = [(ym >> i) & 1 for i in range(n)]
                z = distinguishing_subsequence(x, y)
                assert len(z) <= (n + 2) // 2
                assert is_subsequence(z, x) != is_subsequence(z, y)
    rng = random.Random(73)
    for n in (11, 12):
        for _ in range(20_000):
            x = [rng.randrange(2) for _ in range(n)]
            y = [rng.randrange(2) for _ in range(n)]
            if x == y:
                continue
            z = distinguishing_subsequence(x, y)
            assert len(z) <= (n + 2) // 2
            assert is_subsequence(z, x) != is_subsequence(z, y)


@check("factor tests vs direct scans (all lengths <= 14)", "full")
def _factor_tests_full():
    tm20 = bytes(thue_morse(20))
    length = 14
    tm_factors = {tm20[i:i + length] for i in range(len(tm20) - length + 1)}
    fib = bytes(fibonacci_word(20))
    for w in _bin_words(14, 12):
        b = bytes(w)
        in_tm = any(b in f for f in tm_factors)
        assert tm_factor_test(w) == in_tm
        assert fib_factor_test(w) == (fib.find(b) >= 0)


@check("free band DP vs recursive quadruples (3 letters, len <= 7)", "full")
def _freeband_full():
    import itertools

    words: list[tuple[int, ...]] = []
    for n in range(1, 8):
        words.extend(itertools.product(range(3), repeat=n))
    sigs = {w: band_signature(w) for w in words}
    rng = random.Random(79)
    by_sig: dict = {}
    for w, s in sigs.items():
        by_sig.setdefault(s, []).append(w)
    # same-class pairs agree
    for group in by_sig.values():
        for a, b in zip(group, group[1:]):
            assert idempotent_equivalent(a, b)
    # random cross pairs agree with signatures
    for _ in range(30_000):
        a, b = rng.choice(words), rng.choice(words)
        assert idempotent_equivalent(a, b) == (sigs[a] == sigs[b])


@check("free band class counts saturate at 7 and 160", "full")
def _freeband_counts():
    import itertools

    for letters, want, max_len in ((2, 7, 6), (3, 160, 8)):
        seen = set()
        for n in range(1, max_len + 1):
            for w in itertools.product(range(letters), repeat=n):
                seen.add(band_signature(w))
        assert len(seen) + 1 == want  # plus the empty word


@check("cartesian matching and sub-table oracles (10^3 words)", "full")
def _index_full():
    rng = random.Random(83)
    for _ in range(1000):
        m = rng.randint(1, 12)
        x = [rng.randrange(5) for _ in range(m)]
        y = [rng.randrange(5) for _ in range(rng.randint(m, 400))]
        assert ct_match(x, y) == ct_match_naive(x, y)
    from .subcount import dif_table_marking, dif_table_minleaf
    from .suffixtree import suffix_tree

    for _ in range(1000):
        n = rng.randint(1, 80)
        x = [rng.randrange(4) for _ in range(n)]
        t = suffix_tree(x)
        assert dif_table_marking(t) == dif_table_minleaf(t)


@check("rle cover vs naive cover (exhaustive length <= 18)", "full")
def _rle_cover_full():
    for n in range(14, 19):
        for mask in range(1 << (n - 1)):
            w = [1] + [(mask >> i) & 1 for i in range(n - 1)]
            assert rle_shortest_cover(rle_encode(w)) == oracles.naive_shortest_cover(w)


@check("wildcard index size bound, random words to n = 2000", "full")
def _wildcard_size_full():
    rng = random.Random(89)
    for n in (50, 200, 800, 2000):
        w = [rng.randrange(2) for _ in range(n)]
        idx = wildcard_index(w)
        assert idx.node_count() <= 4 * n * math.log2(n)


@check("superpattern embeds all 8! permutations", "full")
def _superpattern_full():
    import itertools

    n = 8
    word = superpattern_word(n)
    assert len(word) == (n * n + n) // 2
    for pi in itertools.permutations(range(1, n + 1)):
        pos = embed_permutation(list(pi))
        sub = [word[p] for p in pos]
        for i in range(n):
            for j in range(i + 1, n):
                assert (pi[i] < pi[j]) == (sub[i] < sub[j])


@check("jump identity, exhaustive n <= 8", "full")
def _jumps_full():
    import itertools

    for n in range(1, 9):
        for pi in itertools.permutations(range(1, n + 1)):
            lst = list(pi)
            jp = jumps_total(lst, n)
            jq = jumps_total([v + 1 for v in lst], n)
            assert jp + jq == 2 * n + 1
            _, jumps = greedy_embedding(lst, n)
            assert all(j in (0, 1, 2) for j in jumps[1:])


@check("generator completeness n = 7 and universal shapes n <= 6", "full")
def _generators_full():
    for kind in KINDS:
        perms = run_generator(kind, 7)
        assert len(perms) == 5040 and len(set(perms)) == 5040
    for n in range(2, 7):
        assert is_universal_shape_word(universal_shape_word(n), n)


def run(level: str = "fast", out=sys.stdout) -> int:
    """Run the selected suites; returns the number of failures."""
    wanted = ("fast",) if level == "fast" else ("fast", "full")
    failures = 0
    import time

    for name, lvl, fn in CHECKS:
        if lvl not in wanted:
            continue
        t0 = time.time()
        try:
            fn()
        except AssertionError as exc:
            failures += 1
            print(f"FAIL {name}: {exc}", file=out)
        else:
            print(f"pass {name} ({time.time() - t0:.1f}s)", file=out)
    print(f"{'ok' if failures == 0 else 'FAILED'} level={level}", file=out)
    return failures
