"""Line-oriented command front end.

Usage: stringology <area> <verb> [args] [--plain] [--seed N] [--limit N]

Words are accepted as letter strings (a-z), digit strings, or comma-separated
integers; "?" stands for the don't-care symbol.  Output is one JSON object
per line ({ok, value, meta}) unless --plain is given.  Exit status: 0 ok,
1 for domain-level "no" answers, 2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import shlex
import sys
from dataclasses import dataclass
from typing import Callable, Sequence

from . import selftest as selftest_mod
from .avoidance import (
    fib_factor_test, grasshopper_cubefree_word, grasshopper_squarefree_word,
    list_squarefree, list_squarefree_random, recover_square,
    ternary_no_palprefix, tm_factor_test, unbordered_counts,
    unbordered_weighted,
)
from .cartesian import cartesian_tree, ct_border, ct_match, parent_distance, pd_window
from .codec import (
    PairPartition, compress_pairs, entropy, hamming_build, hamming_correct,
    hamming_encode, hamming_matrix, huffman_cost, pairing_partition,
    shrink_runs,
)
from .freeband import idempotent_equivalent, psi
from .gf2 import (
    Gf2Poly, LfsrSpec, debruijn_two_cycles, is_primitive, lfsr, lfsr_gen,
    nth_gen_word,
)
from .patterns import embed_permutation, shape, superpattern_word, universal_shape_word
from .permgen import gen_sequence, rho_stream, run_generator
from .regularities import (
    attractor_construct, is_attractor, local_period_holds, rle_find,
    rle_shortest_cover, two_anticover,
)
from .rings import is_ring_word, ring_word
from .rle import rle_decode, rle_encode
from .slp import slp_expand, slp_length, slp_size, strict_binary
from .subcount import sub_table
from .subseq import (
    count_subsequences, distinguishing_subsequence, hard_pair, lcs,
    longest_palindromic_subsequence, max_subs, min_sub, s_cover_check,
    s_cover_tables, shortest_s_cover_naive,
)
from .suffixtree import suffix_tree
from .twosat import TwoSatFormula, two_sat_solve
from .wildcard import wildcard_index, wildcard_search
from .words import (
    HOLE, all_factors, all_subsequences, fibonacci_word, prefix_table,
    thue_morse,
)

LETTERS = "abcdefghijklmnopqrstuvwxyz"


class UsageError(ValueError):
    pass


@dataclass
class WordForm:
    kind: str  # "letters" | "digits" | "csv"


def parse_word(text: str) -> tuple[list[int], WordForm]:
    if not text:
        raise UsageError("empty word literal")
    if "," in text:
        out = []
        for part in text.split(","):
            part = part.strip()
            if part == "?":
                out.append(HOLE)
            else:
                try:
                    out.append(int(part))
                except ValueError:
                    raise UsageError(f"bad integer {part!r}") from None
        return out, WordForm("csv")
    if all(c.isdigit() or c == "?" for c in text):
        return [HOLE if c == "?" else int(c) for c in text], WordForm("digits")
    if all(c in LETTERS or c == "?" for c in text):
        return [HOLE if c == "?" else LETTERS.index(c) for c in text], WordForm("letters")
    raise UsageError(f"cannot parse word {text!r}")


def format_word(w: Sequence[int], form: WordForm) -> str:
    if form.kind == "letters" and all(s == HOLE or 0 <= s < 26 for s in w):
        return "".join("?" if s == HOLE else LETTERS[s] for s in w)
    if form.kind == "digits" and all(s == HOLE or 0 <= s <= 9 for s in w):
        return "".join("?" if s == HOLE else str(s) for s in w)
    return ",".join("?" if s == HOLE else str(s) for s in w)


def parse_runs(text: str) -> list[tuple[int, int]]:
    """Run form '1:3,0:4,1:2' or a plain binary word."""
    if ":" in text:
        runs = []
        for part in text.split(","):
            bit, exp = part.split(":")
            runs.append((int(bit), int(exp)))
        return runs
    word, _ = parse_word(text)
    return rle_encode(word)


def parse_poly(text: str) -> Gf2Poly:
    """Exponent list '5,2,0' or 'x5+x2+1'."""
    t = text.replace(" ", "").lower()
    if t.startswith("x") or "+" in t:
        exps = []
        for term in t.split("+"):
            if term == "1":
                exps.append(0)
            elif term == "x":
                exps.append(1)
            else:
                exps.append(int(term.lstrip("x").lstrip("^")))
        return Gf2Poly.from_exponents(exps)
    return Gf2Poly.from_exponents([int(p) for p in t.split(",")])


def _bits(word: Sequence[int]) -> str:
    return "".join(str(b) for b in word)


def _perm_str(p: Sequence[int]) -> str:
    if max(p) <= 9:
        return "".join(str(v) for v in p)
    return ",".join(str(v) for v in p)


@dataclass
class Command:
    area: str
    verb: str
    ops: tuple[str, ...]           # public operations this command exercises
    nargs: tuple[str, ...]         # positional argument names
    run: Callable                  # (args, opts) -> (ok_bool, value, meta)
    help: str = ""


def _one_word(args, _):
    return parse_word(args[0])


# ------------------------------------------------------------ handlers

def _registry() -> list[Command]:
    cmds: list[Command] = []

    def add(area, verb, ops, nargs, fn, help=""):
        cmds.append(Command(area, verb, tuple(ops), tuple(nargs), fn, help))

    def h_thue(args, opts):
        w = thue_morse(int(args[0]))
        return True, format_word(w, WordForm("letters")), {"length": len(w)}
    add("word", "thue-morse", ["thue_morse"], ["k"], h_thue)

    def h_fib(args, opts):
        w = fibonacci_word(int(args[0]))
        return True, format_word(w, WordForm("letters")), {"length": len(w)}
    add("word", "fibonacci", ["fibonacci_word"], ["k"], h_fib)

    def h_pref(args, opts):
        w, _ = parse_word(args[0])
        return True, prefix_table(w), {}
    add("word", "prefix-table", ["prefix_table"], ["word"], h_pref)

    def h_factors(args, opts):
        w, form = parse_word(args[0])
        fs = all_factors(w)
        limit = opts.limit or 0
        value = {"count": len(fs)}
        if limit and len(fs) <= limit:
            value["factors"] = sorted(format_word(f, form) for f in fs)
        return True, value, {}
    add("word", "factors", ["all_factors"], ["word"], h_factors)

    def h_subseqs(args, opts):
        w, form = parse_word(args[0])
        ss = all_subsequences(w)
        limit = opts.limit or 0
        value = {"count": len(ss)}
        if limit and len(ss) <= limit:
            value["subsequences"] = sorted(format_word(s, form) for s in ss)
        return True, value, {}
    add("word", "subsequences", ["all_subsequences"], ["word"], h_subseqs)

    def h_rle_encode(args, opts):
        w, _ = parse_word(args[0])
        runs = rle_encode(w)
        return True, ",".join(f"{b}:{e}" for b, e in runs), {"runs": len(runs)}
    add("rle", "encode", ["rle_encode"], ["word"], h_rle_encode)

    def h_rle_decode(args, opts):
        w = rle_decode(parse_runs(args[0]))
        return True, _bits(w), {"length": len(w)}
    add("rle", "decode", ["rle_decode"], ["runs"], h_rle_decode)

    def h_rle_cover(args, opts):
        return True, rle_shortest_cover(parse_runs(args[0])), {}
    add("rle", "shortest-cover", ["rle_shortest_cover"], ["runs"], h_rle_cover)

    def h_rle_find(args, opts):
        found = rle_find(parse_runs(args[0]), parse_runs(args[1]))
        return found, "yes" if found else "no", {}
    add("rle", "find", ["rle_find"], ["pattern_runs", "text_runs"], h_rle_find)

    def h_scover_check(args, opts):
        x, _ = parse_word(args[0])
        y, _ = parse_word(args[1])
        ok = s_cover_check(x, y)
        return ok, "yes" if ok else "no", {}
    add("scover", "check", ["s_cover_check"], ["x", "y"], h_scover_check)

    def h_scover_tables(args, opts):
        x, _ = parse_word(args[0])
        y, _ = parse_word(args[1])
        t = s_cover_tables(x, y)
        if t is None:
            return False, "no-border-embedding", {}
        return True, {
            "L": list(t.first), "R": list(t.last), "LEFT": list(t.left),
            "RIGHT": list(t.right), "P": list(t.p),
        }, {}
    add("scover", "tables", ["s_cover_tables"], ["x", "y"], h_scover_tables)

    def h_scover_shortest(args, opts):
        y, form = parse_word(args[0])
        return True, format_word(shortest_s_cover_naive(y), form), {}
    add("scover", "shortest", ["shortest_s_cover_naive"], ["y"], h_scover_shortest)

    def h_attr_check(args, opts):
        x, _ = parse_word(args[0])
        positions = [int(p) for p in args[1].split(",")]
        ok = is_attractor(x, positions)
        return ok, "yes" if ok else "no", {}
    add("attractor", "check", ["is_attractor"], ["word", "positions"], h_attr_check)

    def h_attr_build(args, opts):
        family, k = args[0], int(args[1])
        att = attractor_construct(family, k)
        return True, sorted(att), {}
    add("attractor", "build", ["attractor_construct"], ["family", "k"], h_attr_build)

    def h_period(args, opts):
        x, _ = parse_word(args[0])
        ok = local_period_holds(x, int(args[1]))
        return ok, "yes" if ok else "no", {}
    add("period", "local", ["local_period_holds"], ["word", "p"], h_period)

    def h_sat(args, opts):
        clause_text = args[0].split()
        clauses = []
        maxvar = 0
        for part in clause_text:
            lits = part.split(",")
            if len(lits) != 2:
                raise UsageError("each clause needs two literals")
            pair = []
            for lit in lits:
                v = int(lit)
                if v == 0:
                    raise UsageError("literals are nonzero signed integers")
                pair.append((abs(v) - 1, v > 0))
                maxvar = max(maxvar, abs(v))
            clauses.append((pair[0], pair[1]))
        f = TwoSatFormula(maxvar, tuple(clauses))
        vals = two_sat_solve(f)
        if vals is None:
            return False, "UNSAT", {}
        return True, "".join("1" if v else "0" for v in vals), {}
    add("sat", "solve", ["two_sat_solve"], ["clauses"], h_sat)

    def h_anticover(args, opts):
        x, form = parse_word(args[0])
        cover = two_anticover(x)
        if cover is None:
            return False, "none", {}
        return True, [list(p) for p in cover], {
            "factors": [format_word(x[i:j + 1], form) for i, j in cover]}
    add("anticover", "find", ["two_anticover"], ["word"], h_anticover)

    def h_distinguish(args, opts):
        x, form = parse_word(args[0])
        y, _ = parse_word(args[1])
        return True, format_word(distinguishing_subsequence(x, y), form), {}
    add("distinguish", "pair", ["distinguishing_subsequence"], ["x", "y"], h_distinguish)

    def h_hard(args, opts):
        x, y = hard_pair(int(args[0]))
        form = WordForm("letters")
        return True, [format_word(x, form), format_word(y, form)], {}
    add("distinguish", "hard-pair", ["hard_pair"], ["n"], h_hard)

    def h_minsub(args, opts):
        x, form = parse_word(args[0])
        return True, format_word(min_sub(x, int(args[1])), form), {}
    add("minsub", "run", ["min_sub"], ["word", "k"], h_minsub)

    def h_lcs(args, opts):
        u, form = parse_word(args[0])
        v, _ = parse_word(args[1])
        a, b = lcs(u, v)
        return True, {
            "length": len(a), "positions_u": a, "positions_v": b,
            "word": format_word([u[i] for i in a], form),
        }, {}
    add("lcs", "run", ["lcs"], ["u", "v"], h_lcs)

    def h_lps(args, opts):
        x, form = parse_word(args[0])
        return True, format_word(longest_palindromic_subsequence(x), form), {}
    add("lps", "run", ["longest_palindromic_subsequence"], ["word"], h_lps)

    def h_subs_count(args, opts):
        x, _ = parse_word(args[0])
        return True, count_subsequences(x), {}
    add("subs", "count", ["count_subsequences"], ["word"], h_subs_count)

    def h_subs_max(args, opts):
        return True, max_subs(int(args[0])), {}
    add("subs", "max", ["max_subs"], ["n"], h_subs_max)

    def h_ham_build(args, opts):
        code = hamming_build(int(args[0]))
        return True, {"rows": ["".join(map(str, row)) for row in hamming_matrix(code)],
                      "n": code.n, "k": code.k}, {}
    add("hamming", "build", ["hamming_build"], ["r"], h_ham_build)

    def h_ham_encode(args, opts):
        code = hamming_build(int(opts.r or 3))
        w, _ = parse_word(args[0])
        return True, _bits(hamming_encode(code, w)), {}
    add("hamming", "encode", ["hamming_encode"], ["word"], h_ham_encode)

    def h_ham_correct(args, opts):
        code = hamming_build(int(opts.r or 3))
        y, _ = parse_word(args[0])
        fixed, pos = hamming_correct(code, y)
        return True, _bits(fixed), {"error_position": pos}
    add("hamming", "correct", ["hamming_correct"], ["word"], h_ham_correct)

    def h_huffman(args, opts):
        weights = [float(a) for a in args[0].split(",")]
        cost, depths = huffman_cost(weights)
        return True, {"cost": cost, "depths": depths}, {}
    add("huffman", "cost", ["huffman_cost"], ["weights"], h_huffman)

    def h_entropy(args, opts):
        return True, entropy([float(a) for a in args[0].split(",")]), {}
    add("huffman", "entropy", ["entropy"], ["weights"], h_entropy)

    def h_shrink(args, opts):
        x, form = parse_word(args[0])
        return True, format_word(shrink_runs(x), form), {}
    add("recompress", "shrink", ["shrink_runs"], ["word"], h_shrink)

    def h_partition(args, opts):
        x, form = parse_word(args[0])
        part = pairing_partition(x)
        return True, {
            "left": format_word(sorted(part.left), form),
            "right": format_word(sorted(part.right), form),
        }, {}
    add("recompress", "partition", ["pairing_partition"], ["word"], h_partition)

    def h_compress(args, opts):
        x, form = parse_word(args[0])
        left, _ = parse_word(args[1])
        right, _ = parse_word(args[2])
        part = PairPartition(frozenset(left), frozenset(right))
        out = compress_pairs(x, part)
        return True, format_word(out, form), {"length": len(out)}
    add("recompress", "compress", ["compress_pairs"], ["word", "left", "right"], h_compress)

    def h_tm_test(args, opts):
        x, _ = parse_word(args[0])
        ok = tm_factor_test(x)
        return ok, "yes" if ok else "no", {}
    add("morphic", "tm-test", ["tm_factor_test"], ["word"], h_tm_test)

    def h_fib_test(args, opts):
        x, _ = parse_word(args[0])
        ok = fib_factor_test(x)
        return ok, "yes" if ok else "no", {}
    add("morphic", "fib-test", ["fib_factor_test"], ["word"], h_fib_test)

    def h_gs_square(args, opts):
        w = grasshopper_squarefree_word(int(args[0]))
        return True, ",".join(map(str, w)), {}
    add("grasshopper", "square-free", ["grasshopper_squarefree_word"], ["n"], h_gs_square)

    def h_gs_cube(args, opts):
        w = grasshopper_cubefree_word(int(args[0]))
        return True, format_word(w, WordForm("letters")), {}
    add("grasshopper", "cube-free", ["grasshopper_cubefree_word"], ["n"], h_gs_cube)

    def h_recover(args, opts):
        x, _ = parse_word(args[0])
        z = [int(p) for p in args[1].split(",")]
        v = recover_square(x, z)
        return True, format_word(v, WordForm("letters")), {}
    add("grasshopper", "recover", ["recover_square"], ["x", "z"], h_recover)

    def h_unbordered(args, opts):
        n = int(args[0])
        u, v, t = unbordered_counts(n)
        return True, {"u": u, "v": v, "t": t}, {}
    add("unbordered", "counts", ["unbordered_counts"], ["n"], h_unbordered)

    def h_weighted(args, opts):
        return True, unbordered_weighted(int(args[0]), int(args[1])), {}
    add("unbordered", "weighted", ["unbordered_weighted"], ["n", "k"], h_weighted)

    def h_palprefix(args, opts):
        return True, ternary_no_palprefix(int(args[0])), {}
    add("unbordered", "palprefix3", ["ternary_no_palprefix"], ["n"], h_palprefix)

    def _parse_lists(text: str) -> list[list[int]]:
        return [parse_word(part)[0] for part in text.split(",")]

    def h_listsq_run(args, opts):
        lists = _parse_lists(args[0])
        control = [int(c) for c in args[1]]
        trace = list_squarefree(lists, control)
        ok = len(trace.word) == len(lists)
        return ok, format_word(list(trace.word), WordForm("letters")), {
            "pushes": trace.ops.count("push"), "pops": trace.ops.count("pop")}
    add("listsq", "run", ["list_squarefree"], ["lists", "control"], h_listsq_run)

    def h_listsq_random(args, opts):
        if opts.seed is None:
            raise UsageError("listsq random requires --seed")
        lists = _parse_lists(args[0])
        word, tries = list_squarefree_random(lists, opts.seed)
        return True, format_word(word, WordForm("letters")), {"tries": tries}
    add("listsq", "random", ["list_squarefree_random"], ["lists"], h_listsq_random)

    def h_psi(args, opts):
        x, form = parse_word(args[0])
        q = psi(x)
        return True, {
            "prefix": format_word(q.prefix, form),
            "first_new": format_word([q.first_new], form),
            "last_new": format_word([q.last_new], form),
            "suffix": format_word(q.suffix, form),
        }, {}
    add("freeband", "psi", ["psi"], ["word"], h_psi)

    def h_equiv(args, opts):
        x, _ = parse_word(args[0])
        y, _ = parse_word(args[1])
        ok = idempotent_equivalent(x, y)
        return ok, "yes" if ok else "no", {}
    add("freeband", "equiv", ["idempotent_equivalent"], ["x", "y"], h_equiv)

    def h_gen_seq(args, opts):
        kind, n = args[0], int(args[1])
        g = gen_sequence(kind, n)
        value = {"size": slp_size(g), "length": slp_length(g)}
        if opts.strict:
            g2 = strict_binary(g)
            value["strict_size"] = slp_size(g2)
        if opts.expand:
            value["word"] = ",".join(map(str, slp_expand(g)))
        return True, value, {}
    add("gen", "seq", ["gen_sequence", "slp_size", "slp_length", "slp_expand",
                       "strict_binary"], ["kind", "n"], h_gen_seq)

    def h_gen_run(args, opts):
        kind, n = args[0], int(args[1])
        start = None
        if opts.start:
            start = [int(v) for v in opts.start.split(",")]
        perms = run_generator(kind, n, start=start)
        return True, [_perm_str(p) for p in perms], {"count": len(perms)}
    add("gen", "run", ["run_generator"], ["kind", "n"], h_gen_run)

    def h_rho(args, opts):
        return True, list(rho_stream(int(args[0]))), {}
    add("gen", "rho", ["rho_stream"], ["limit"], h_rho)

    def h_super_word(args, opts):
        w = superpattern_word(int(args[0]))
        return True, ",".join(map(str, w)), {"length": len(w)}
    add("superpattern", "word", ["superpattern_word"], ["n"], h_super_word)

    def h_embed(args, opts):
        pi = [int(v) for v in args[0].split(",")]
        return True, embed_permutation(pi), {}
    add("superpattern", "embed", ["embed_permutation"], ["pi"], h_embed)

    def h_shape(args, opts):
        u = [int(v) for v in args[0].split(",")]
        return True, list(shape(u)), {}
    add("shape", "of", ["shape"], ["word"], h_shape)

    def h_universal(args, opts):
        w = universal_shape_word(int(args[0]))
        return True, ",".join(map(str, w)), {"length": len(w)}
    add("shape", "universal", ["universal_shape_word"], ["n"], h_universal)

    def h_ring(args, opts):
        w = ring_word(int(args[0]), int(args[1]))
        return True, _bits(w), {}
    add("ring", "word", ["ring_word"], ["n", "k"], h_ring)

    def h_ring_check(args, opts):
        w, _ = parse_word(args[0])
        ok = is_ring_word(w, int(args[1]))
        return ok, "yes" if ok else "no", {}
    add("ring", "check", ["is_ring_word"], ["word", "k"], h_ring_check)

    def h_lfsr(args, opts):
        taps, _ = parse_word(args[0])
        return True, _bits(lfsr(LfsrSpec(tuple(taps)))), {}
    add("lfsr", "stream", ["lfsr"], ["taps"], h_lfsr)

    def h_lfsr_gen(args, opts):
        taps, _ = parse_word(args[0])
        words = lfsr_gen(LfsrSpec(tuple(taps)))
        if opts.limit:
            words = words[:opts.limit]
        return True, [_bits(w) for w in words], {}
    add("lfsr", "gen", ["lfsr_gen"], ["taps"], h_lfsr_gen)

    def h_lfsr_nth(args, opts):
        taps, _ = parse_word(args[0])
        method = opts.method or "matrix"
        return True, _bits(nth_gen_word(LfsrSpec(tuple(taps)), int(args[1]), method)), {}
    add("lfsr", "nth", ["nth_gen_word"], ["taps", "m"], h_lfsr_nth)

    def h_primitive(args, opts):
        ok = is_primitive(parse_poly(args[0]))
        return ok, "yes" if ok else "no", {}
    add("lfsr", "primitive", ["is_primitive"], ["poly"], h_primitive)

    def h_two_cycles(args, opts):
        w, u = debruijn_two_cycles(parse_poly(args[0]))
        return True, {"w": _bits(w), "u": _bits(u)}, {}
    add("lfsr", "two-cycles", ["debruijn_two_cycles"], ["poly"], h_two_cycles)

    def h_suffix_tree(args, opts):
        x, _ = parse_word(args[0])
        t = suffix_tree(x)
        internal = sorted(
            t.depth[v] for v in range(1, len(t.parent)) if not t.is_leaf(v))
        return True, {"nodes": len(t.parent),
                      "leaves": sum(t.is_leaf(v) for v in range(len(t.parent))),
                      "internal_depths": internal}, {}
    add("suffix", "tree", ["suffix_tree"], ["word"], h_suffix_tree)

    def h_subtable(args, opts):
        x, _ = parse_word(args[0])
        sub, dif = sub_table(x)
        return True, {"sub": sub, "dif": dif}, {}
    add("suffix", "subtable", ["sub_table"], ["word"], h_subtable)

    def h_wc_build(args, opts):
        x, _ = parse_word(args[0])
        idx = wildcard_index(x)
        return True, {"nodes": idx.node_count()}, {}
    add("wildcard", "build", ["wildcard_index"], ["word"], h_wc_build)

    def h_wc_search(args, opts):
        x, _ = parse_word(args[0])
        p, _ = parse_word(args[1])
        ok = wildcard_search(wildcard_index(x), p)
        return ok, "yes" if ok else "no", {}
    add("wildcard", "search", ["wildcard_search"], ["word", "pattern"], h_wc_search)

    def h_ct_tree(args, opts):
        x, _ = parse_word(args[0])
        t = cartesian_tree(x)
        return True, {"root": t.root, "left": t.left, "right": t.right}, {}
    add("cartesian", "tree", ["cartesian_tree"], ["word"], h_ct_tree)

    def h_pd(args, opts):
        x, _ = parse_word(args[0])
        return True, parent_distance(x), {}
    add("cartesian", "pd", ["parent_distance"], ["word"], h_pd)

    def h_pd_window(args, opts):
        x, _ = parse_word(args[0])
        return True, pd_window(parent_distance(x), int(args[1]), int(args[2])), {}
    add("cartesian", "pd-window", ["pd_window"], ["word", "i", "j"], h_pd_window)

    def h_ct_border(args, opts):
        x, _ = parse_word(args[0])
        return True, ct_border(x), {}
    add("cartesian", "border", ["ct_border"], ["word"], h_ct_border)

    def h_ct_match(args, opts):
        x, _ = parse_word(args[0])
        y, _ = parse_word(args[1])
        positions = ct_match(x, y)
        return bool(positions), positions, {}
    add("cartesian", "match", ["ct_match"], ["pattern", "text"], h_ct_match)

    def h_selftest(args, opts):
        level = opts.level or "fast"
        failures = selftest_mod.run(level=level, out=sys.stdout)
        return failures == 0, f"{'ok' if failures == 0 else 'FAILED'}", {"failures": failures}
    add("selftest", "run", ["selftest"], [], h_selftest)

    return cmds


REGISTRY = _registry()


def covered_operations() -> list[str]:
    out: list[str] = []
    for cmd in REGISTRY:
        out.extend(cmd.ops)
    return out


def _emit(ok: bool, value, meta, plain: bool, stream) -> None:
    if plain:
        if isinstance(value, (list, tuple)):
            for item in value:
                print(item, file=stream)
        elif isinstance(value, dict):
            for k, v in value.items():
                print(f"{k}: {v}", file=stream)
        else:
            print(value, file=stream)
    else:
        print(json.dumps({"ok": ok, "value": value, "meta": meta}, default=str),
              file=stream)


def _dispatch_tokens(tokens: list[str], plain: bool, stream) -> int:
    parser = argparse.ArgumentParser(prog="stringology", add_help=False)
    parser.add_argument("area")
    parser.add_argument("verb")
    parser.add_argument("args", nargs="*")
    parser.add_argument("--plain", action="store_true")
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--limit", type=int, default=None)
    parser.add_argument("--level", choices=("fast", "full"), default=None)
    parser.add_argument("--method", choices=("matrix", "poly"), default=None)
    parser.add_argument("--r", type=int, default=None)
    parser.add_argument("--start", default=None)
    parser.add_argument("--strict", action="store_true")
    parser.add_argument("--expand", action="store_true")
    try:
        opts = parser.parse_args(tokens)
    except SystemExit:
        return 2
    plain = plain or opts.plain
    cmd = next((c for c in REGISTRY if c.area == opts.area and c.verb == opts.verb), None)
    if cmd is None:
        _emit(False, f"unknown command {opts.area} {opts.verb}", {}, plain, stream)
        return 2
    if len(opts.args) != len(cmd.nargs):
        _emit(False, f"expected arguments: {' '.join(cmd.nargs)}", {}, plain, stream)
        return 2
    try:
        ok, value, meta = cmd.run(opts.args, opts)
    except UsageError as exc:
        _emit(False, str(exc), {}, plain, stream)
        return 2
    except (ValueError, KeyError) as exc:
        _emit(False, f"{type(exc).__name__}: {exc}", {}, plain, stream)
        return 2
    _emit(ok, value, meta, plain, stream)
    return 0 if ok else 1


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv[:1] == ["batch"]:
        plain = "--plain" in argv
        worst = 0
        for line in sys.stdin:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            rc = _dispatch_tokens(shlex.split(line) + (["--plain"] if plain else []),
                                  plain, sys.stdout)
            worst = max(worst, rc)
        return worst
    if not argv or argv in (["-h"], ["--help"]):
        areas = {}
        for c in REGISTRY:
            areas.setdefault(c.area, []).append(c.verb)
        print(__doc__)
        for area in sorted(areas):
            print(f"  {area}: {', '.join(sorted(areas[area]))}")
        print("  batch: read one command per line from stdin")
        return 0
    return _dispatch_tokens(argv, False, sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
