"""Acceptance gate: one test per criterion, each reporting a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py`` (lines appear in the terminal
summary) or ``python3 tests/test_acceptance.py`` (lines on stdout, exit 1 if
any criterion fails).
"""

import math
import sys
import time
from itertools import combinations

from cyclelens.construct import (
    bcfy_construct,
    bcfy_for_order,
    cycle_lengths_closed_form,
    refined_upper_bound,
)
from cyclelens.cycles import enumerate_cycles, has_repeated_length, is_two_connected
from cyclelens.errors import CapExceeded
from cyclelens.ears import analyze
from cyclelens.feasible import feasibility_index
from cyclelens.ordering import (
    check_arrangement,
    check_fences,
    counting_audit,
    degree_profile,
    order_paths,
    separator,
)
from cyclelens.props import UNCONDITIONAL, check_propositions, few_cycles
from cyclelens.search import exact_f, shi_formula
from cyclelens.sidon import max_sidon_exact, singer_difference_set

try:
    from conftest import bcfy_corpus, random_corpus
except ImportError:  # imported as tests.test_acceptance
    from tests.conftest import bcfy_corpus, random_corpus

RESULTS: dict[int, str] = {}


def report(k: int, ok: bool, detail: str):
    RESULTS[k] = f"criterion {k}: {'PASS' if ok else 'FAIL'} - {detail}"
    assert ok, RESULTS[k]


def _families():
    return random_corpus(120) + bcfy_corpus((2, 3, 4, 5))


# -- 1 ---------------------------------------------------------------------------------


def test_criterion_1_singer():
    bad, slowest = [], 0.0
    for q in (2, 3, 4, 5, 7, 8, 9, 11, 13):
        t = time.perf_counter()
        d = singer_difference_set(q)
        slowest = max(slowest, time.perf_counter() - t)
        v = q * q + q + 1
        hits = [0] * v
        for x, y in combinations(d.elements, 2):
            hits[(x - y) % v] += 1
            hits[(y - x) % v] += 1
        if d.v != v or len(d.elements) != q + 1 or hits[0] or any(h != 1 for h in hits[1:]):
            bad.append(q)
    report(1, not bad and slowest < 1.0, f"9 prime powers, failures {bad}, slowest {slowest:.3f}s")


# -- 2 ---------------------------------------------------------------------------------


def test_criterion_2_construction():
    bad = []
    for q in (2, 3, 4, 5, 7, 11, 13):
        cg = bcfy_construct(q)
        g = cg.graph
        n = q * q + q + 2
        sp = enumerate_cycles(g)
        ok = (
            g.n == n
            and g.m == n + q - 1
            and is_two_connected(g)
            and sp.cycle_count == math.comb(q + 1, 2)
            and sp.distinct
            and tuple(sorted(sp.lengths)) == cycle_lengths_closed_form(cg)
            and g.m - n >= math.sqrt(n) - 2
        )
        if not ok:
            bad.append(q)
    report(2, not bad, f"q in 2..13 fully enumerated, failures {bad}")


# -- 3 ---------------------------------------------------------------------------------


def test_criterion_3_small_exact_values():
    t = time.perf_counter()
    got = {n: exact_f(n) for n in range(3, 9)}
    elapsed = time.perf_counter() - t
    ok = all(r.proven_optimal and r.f == shi_formula(n) for n, r in got.items()) and elapsed <= 600
    vals = {n: r.f for n, r in got.items()}
    report(3, ok, f"f(3..8) = {vals}, {elapsed:.1f}s")


# -- 4 ---------------------------------------------------------------------------------


def test_criterion_4_proposition_suite():
    fams = _families()
    randoms = sum(1 for name, _, _ in fams if name.startswith("rand"))
    failures = []
    for name, g, uv in fams:
        assert 6 <= g.n <= 40 or name.startswith("bcfy")
        assert g.m <= g.n + 8 or name.startswith("bcfy")
        for c in check_propositions(analyze(g, uv), UNCONDITIONAL):
            if not c.passed:
                failures.append((name, c.name))
    report(4, randoms >= 100 and not failures, f"{randoms} random + 4 constructed graphs, failures {failures[:5]}")


# -- 5 ---------------------------------------------------------------------------------


def test_criterion_5_conditional_bounds():
    fams = _families() + bcfy_corpus((7,))
    used, bad = 0, []
    for name, g, uv in fams:
        fam = analyze(g, uv)
        if not few_cycles(fam):
            continue
        used += 1
        idx = feasibility_index(fam, budget=10**6)
        n = g.n
        if len(idx.triples) > n or len(idx.quadruples) > 4 * n or idx.w_total() > 51 * n:
            bad.append(name)
    report(5, used > 0 and not bad, f"{used} graphs with <= n-2 cycles, failures {bad}")


# -- 6, 7 ------------------------------------------------------------------------------


def _orderings():
    for name, g, uv in _families():
        fam = analyze(g, uv)
        sep = separator(fam)
        for beta, gamma in ((None, None), (1, 2), (1, 3)):
            yield name, order_paths(fam, sep, degree_profile(fam, sep, beta, gamma))


def test_criterion_6_ordering():
    count, bad = 0, []
    for name, o in _orderings():
        count += 1
        checks = check_arrangement(o) + [check_fences(o)]
        bad += [(name, c.name) for c in checks if not c.passed]
    report(6, not bad, f"{count} arrangements, arrangement and fence failures {bad[:5]}")


def test_criterion_7_counting_audit():
    count, bad = 0, []
    for name, o in _orderings():
        count += 1
        a = counting_audit(o)
        if not (a.sigma_pairs == a.sigma_edges == sum(a.cycle_lengths)) or min(a.cycle_lengths, default=1) < 0:
            bad.append(name)
    report(7, not bad, f"{count} audits, mismatches {bad[:5]}")


# -- 8 ---------------------------------------------------------------------------------


def test_criterion_8_edge_bound():
    certified = []
    for n in range(8, 201):
        certified.append(bcfy_for_order(n).graph)
    for q in (2, 3, 4, 5, 7, 8, 9, 11, 13):
        certified.append(bcfy_construct(q).graph)
    for n in range(3, 9):
        certified.append(exact_f(n).witness)
        certified.append(exact_f(n, require_2connected=True).witness)
    for _, g, _ in random_corpus(120):
        certified.append(g)
    checked, bad = 0, []
    for g in certified:
        if g.n > 200:
            continue
        try:
            if has_repeated_length(g, cap=10**5).repeated:
                continue
        except CapExceeded:  # too many cycles to be repeat-free
            continue
        checked += 1
        if g.m > refined_upper_bound(g.n):
            bad.append((g.n, g.m))
    report(8, checked > 0 and not bad, f"{checked} repeat-free graphs within the bound, violations {bad}")


# -- 9 ---------------------------------------------------------------------------------


def _subset_max(n):
    for size in range(n, 0, -1):
        for sub in combinations(range(1, n + 1), size):
            diffs = [b - a for a, b in combinations(sub, 2)]
            if len(diffs) == len(set(diffs)):
                return size
    return 0


def test_criterion_9_sidon_values():
    got = (max_sidon_exact(7).size, max_sidon_exact(13).size)
    oracle = (_subset_max(7), _subset_max(13))
    report(9, got == oracle == (4, 5), f"sizes at n=7, 13: {got}, subset oracle {oracle}")


if __name__ == "__main__":
    failed = False
    for name, fn in sorted((k, v) for k, v in globals().items() if k.startswith("test_criterion_")):
        try:
            fn()
        except AssertionError:
            failed = True
    for k in sorted(RESULTS):
        print(RESULTS[k])
    sys.exit(1 if failed else 0)
