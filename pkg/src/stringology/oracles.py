"""Brute-force reference implementations used to cross-check the fast paths.

Everything here favours obviousness over speed and is shared by the test
suite and the built-in selftest command.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .words import all_factors, approx_eq


def words_over(alphabet: Sequence[int], length: int) -> Iterable[tuple[int, ...]]:
    if length == 0:
        yield ()
        return
    for prefix in words_over(alphabet, length - 1):
        for c in alphabet:
            yield prefix + (c,)


def naive_shortest_cover(x: Sequence[int]) -> int:
    """Shortest prefix of x whose occurrences tile x; |x| when none do."""
    n = len(x)
    t = tuple(x)
    for length in range(1, n):
        pref = t[:length]
        covered = 0  # positions < covered are covered
        i = 0
        ok = True
        while i + length <= n:
            if t[i:i + length] == pref:
                if i > covered:
                    ok = False
                    break
                covered = i + length
            i += 1
        if ok and covered == n:
            return length
    return n


def naive_is_cover(x: Sequence[int], length: int) -> bool:
    n = len(x)
    t = tuple(x)
    pref = t[:length]
    covered = 0
    for i in range(n - length + 1):
        if t[i:i + length] == pref:
            if i > covered:
                return False
            covered = i + length
    return covered == n


def factor_search(pattern: Sequence[int], text: Sequence[int]) -> bool:
    p, t = tuple(pattern), tuple(text)
    return any(t[i:i + len(p)] == p for i in range(len(t) - len(p) + 1))


def anticover_exists_bruteforce(x: Sequence[int]) -> bool:
    """Exhaustive search over selections of length-2 factor occurrences,
    memoized on (position, used factor words, coverage overhang delta)."""
    n = len(x)
    if n < 2:
        return False
    words = sorted({(x[i], x[i + 1]) for i in range(n - 1)})
    widx = {w: i for i, w in enumerate(words)}

    from functools import lru_cache

    @lru_cache(maxsize=None)
    def feasible(p: int, mask: int, delta: int) -> bool:
        # delta = (first uncovered position) - p, in {0, 1, 2}
        if p == n - 1:
            return delta >= 1
        out = False
        w = widx[(x[p], x[p + 1])]
        if not (mask >> w) & 1:
            out = feasible(p + 1, mask | (1 << w), 1)
        if not out and delta >= 1:
            out = feasible(p + 1, mask, delta - 1)
        return out

    return feasible(0, 0, 0)


def hole_word_local_periods(x: Sequence[int]) -> set[int]:
    return {
        p
        for p in range(1, len(x) + 1)
        if all(approx_eq(x[i], x[i + p]) for i in range(len(x) - p))
    }


def subsequence_words(x: Sequence[int]) -> set[tuple[int, ...]]:
    out: set[tuple[int, ...]] = {()}
    for c in x:
        out |= {t + (c,) for t in out}
    return out


def min_subsequence_of_length(x: Sequence[int], k: int) -> tuple[int, ...]:
    from itertools import combinations

    return min(tuple(x[i] for i in idx) for idx in combinations(range(len(x)), k))


def palindromic_subseq_longest(x: Sequence[int]) -> int:
    best = 0
    for s in subsequence_words(x):
        if s == s[::-1]:
            best = max(best, len(s))
    return best


def distinct_factor_count(x: Sequence[int]) -> int:
    return len(all_factors(x)) if x else 0


def grasshopper_square_exists(y: Sequence[int]) -> bool:
    """Reachability over simultaneous walks of the two square halves."""
    n = len(y)
    for a in range(n):
        for b in (a + 1, a + 2):
            if b >= n:
                continue
            # pairs (i, j): i walks the first half ending at a, j the second
            # half starting at b; labels must agree step by step
            frontier = {(i, b) for i in range(a + 1) if y[i] == y[b]}
            seen = set(frontier)
            while frontier:
                if any(i == a for i, _ in frontier):
                    return True
                nxt = set()
                for i, j in frontier:
                    if i >= a:
                        continue
                    for di in (1, 2):
                        for dj in (1, 2):
                            ii, jj = i + di, j + dj
                            if ii <= a and jj < n and y[ii] == y[jj]:
                                if (ii, jj) not in seen:
                                    seen.add((ii, jj))
                                    nxt.add((ii, jj))
                frontier = nxt
    return False


def grasshopper_cube_exists(y: Sequence[int]) -> bool:
    """Depth-first enumeration of grasshopper paths checking for w w w."""
    n = len(y)

    def dfs(path: list[int]) -> bool:
        L = len(path)
        if L and L % 3 == 0:
            m = L // 3
            w = [y[p] for p in path]
            if w[:m] == w[m:2 * m] == w[2 * m:]:
                return True
        last = path[-1]
        for d in (1, 2):
            nxt = last + d
            if nxt < n:
                path.append(nxt)
                if dfs(path):
                    return True
                path.pop()
        return False

    return any(dfs([s]) for s in range(n))


def is_bordered(w: Sequence[int]) -> bool:
    t = tuple(w)
    return any(t[:k] == t[len(t) - k:] for k in range(1, len(t)))


def has_even_palindromic_prefix(w: Sequence[int]) -> bool:
    t = tuple(w)
    return any(
        t[:k] == t[:k][::-1] for k in range(2, len(t) + 1, 2)
    )


def has_odd_palindromic_prefix(w: Sequence[int]) -> bool:
    t = tuple(w)
    return any(
        t[:k] == t[:k][::-1] for k in range(3, len(t) + 1, 2)
    )


def has_any_palindromic_prefix(w: Sequence[int]) -> bool:
    t = tuple(w)
    return any(t[:k] == t[:k][::-1] for k in range(2, len(t) + 1))


def approx_occurs(pattern: Sequence[int], text: Sequence[int]) -> bool:
    m, n = len(pattern), len(text)
    for i in range(n - m + 1):
        if all(approx_eq(pattern[j], text[i + j]) for j in range(m)):
            return True
    return False
