import math
import random
from itertools import product

import pytest
from hypothesis import given, strategies as st

from cyclelens.construct import bcfy_construct
from cyclelens.ears import analyze
from cyclelens.errors import InvalidInput
from cyclelens.ordering import (
    _split_cost,
    band_parameters,
    check_arrangement,
    check_fences,
    check_high_degree_trees,
    check_low_degree_crossings,
    consecutiveness_report,
    counting_audit,
    degree_profile,
    order_paths,
    prune_paths,
    separator,
    varying_edges,
    verify_separator,
)
from cyclelens.props import few_cycles

OVERRIDES = [(None, None), (1, 2), (1, 3), (2, 2)]


def families(corpus, limit=None):
    for name, g, uv in corpus[:limit]:
        fam = analyze(g, uv)
        rr = random.Random(name)
        subsets = [None] + [rr.sample(range(fam.s + 1), rr.randint(1, fam.s + 1)) for _ in range(2)]
        yield name, fam, subsets


def test_separator_confines_variation(corpus):
    for name, fam, subsets in families(corpus):
        for sub in subsets:
            sep = separator(fam, sub)
            assert verify_separator(fam, sep), (name, sub)
            assert sep.varying == varying_edges(fam, sub)


def test_singleton_separator():
    fam = analyze(bcfy_construct(3).graph, (0, 1))
    sep = separator(fam, [2])
    assert sep.u0 == sep.v0 == fam.u
    assert not sep.varying
    with pytest.raises(InvalidInput):
        separator(fam, [])


def test_arrangement_and_fences(corpus):
    for name, fam, subsets in families(corpus):
        for sub in subsets:
            sep = separator(fam, sub)
            for beta, gamma in OVERRIDES:
                o = order_paths(fam, sep, degree_profile(fam, sep, beta, gamma))
                assert sorted(o.arrangement) == sorted(sep.paths)
                for c in check_arrangement(o) + [check_fences(o)]:
                    assert c.passed, (name, sub, beta, gamma, c.name, c.violations[:2])


def test_counting_audit_consistency(corpus):
    for name, fam, subsets in families(corpus):
        for sub in subsets:
            sep = separator(fam, sub)
            for beta, gamma in OVERRIDES:
                o = order_paths(fam, sep, degree_profile(fam, sep, beta, gamma))
                a = counting_audit(o)
                assert a.sigma_pairs == a.sigma_edges == sum(a.cycle_lengths), name
                assert all(x > 0 for x in a.cycle_lengths)
                assert a.lower_side == len(a.phi) * (len(a.phi) + 1) // 2


def test_high_degree_trees_under_hypothesis(corpus):
    """On pruned families with gamma = 2 n^(1/4) + 1 the high-degree edges
    split into an L-tree and an R-tree, and low-degree crossings obey the
    degree limit, for graphs with few cycles."""
    examined = 0
    for name, g, uv in corpus:
        fam = analyze(g, uv)
        if not few_cycles(fam):
            continue
        pr = prune_paths(fam)
        if not pr.kept:
            continue
        sep = separator(fam, pr.kept)
        gam = math.floor(2 * g.n**0.25) + 1
        for bg in [(None, None), (1, gam)]:
            if bg[1] and bg[1] > len(pr.kept):
                continue
            prof = degree_profile(fam, sep, *bg)
            o = order_paths(fam, sep, prof)
            examined += 1
            assert check_high_degree_trees(fam, sep, o.left, o.right, o.mixed).passed, name
            assert check_low_degree_crossings(fam, sep, prof).passed, name
    assert examined > 0


def test_band_parameters():
    assert band_parameters(4) == (0, ())
    A, alphas = band_parameters(2**64)
    assert A == math.ceil(64 / (4 * 6)) - 2 == 1
    assert len(alphas) == 2 and alphas[0] < alphas[1]
    # fallback band at desk sizes
    fam = analyze(bcfy_construct(3).graph, (0, 1))
    sep = separator(fam)
    prof = degree_profile(fam, sep)
    assert prof.fallback and (prof.beta, prof.gamma) == (1.0, float(len(sep.paths)))
    with pytest.raises(InvalidInput):
        degree_profile(fam, sep, 3, 2)
    with pytest.raises(InvalidInput):
        degree_profile(fam, sep, 0, 2)


def brute_split_cost(bits):
    best = len(bits)
    for keep in product([0, 1], repeat=len(bits)):
        kept = [b for b, k in zip(bits, keep) if k]
        if kept == sorted(kept, reverse=True):
            best = min(best, len(bits) - sum(keep))
    return best


@given(st.lists(st.integers(0, 1), max_size=10))
def test_split_cost_matches_brute_force(bits):
    assert _split_cost(bits) == brute_split_cost(bits)


def test_consecutiveness_report_runs(corpus):
    for name, fam, subsets in families(corpus, 30):
        o = order_paths(fam, separator(fam), degree_profile(fam, separator(fam), 1, 2))
        for row in consecutiveness_report(o):
            assert row.degree >= 2
            assert 0 <= row.after_first <= row.degree
            assert row.one_interval >= 0


def test_prune_thresholds():
    fam = analyze(bcfy_construct(4).graph, (0, 1))
    everything = prune_paths(fam, c_w=10**9, c_t=10**9)
    assert everything.kept == tuple(fam.indices())
    nothing = prune_paths(fam, c_w=0, c_t=0)
    assert nothing.kept == ()
