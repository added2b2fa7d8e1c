import math
from collections import Counter
from functools import lru_cache

import networkx as nx
import pytest

from cyclelens.canon import canonical_form
from cyclelens.cycles import enumerate_cycles, is_two_connected
from cyclelens.errors import InvalidInput
from cyclelens.graph import Graph
from cyclelens.search import exact_f, shi_formula, uniquely_pancyclic_search

# exhaustive over the networkx atlas of all graphs on <= 7 vertices
FROZEN_F = {3: 0, 4: 0, 5: 1, 6: 1, 7: 1}
FROZEN_F2 = {3: 0, 4: 0, 5: 1, 6: 1, 7: 1}
FROZEN_UPC = {3: 1, 4: 0, 5: 1, 6: 0, 7: 0}


@lru_cache(maxsize=None)
def atlas_oracle():
    f, f2, upc = {}, {}, Counter()
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if n < 3:
            continue
        lengths = [len(c) for c in nx.simple_cycles(h) if len(c) >= 3]
        if len(lengths) != len(set(lengths)):
            continue
        ex = h.number_of_edges() - n
        f[n] = max(f.get(n, ex), ex)
        if nx.is_biconnected(h):
            f2[n] = max(f2.get(n, ex), ex)
        if sorted(lengths) == list(range(3, n + 1)):
            upc[n] += 1
    return f, f2, upc


def test_atlas_oracle_matches_frozen_values():
    f, f2, upc = atlas_oracle()
    assert f == FROZEN_F
    assert f2 == FROZEN_F2
    assert {n: upc[n] for n in range(3, 8)} == FROZEN_UPC


def test_shi_formula():
    assert [shi_formula(n) for n in range(2, 9)] == [0, 0, 0, 1, 1, 1, 2]
    assert shi_formula(16) == 3
    for n in range(2, 5000):
        assert shi_formula(n) == max(0, math.floor((math.sqrt(8 * n - 15) - 3) / 2))
    with pytest.raises(InvalidInput):
        shi_formula(1)


@pytest.mark.parametrize("n", range(3, 8))
def test_exact_f_matches_atlas(n):
    r = exact_f(n)
    assert r.proven_optimal
    assert r.f == FROZEN_F[n]
    r2 = exact_f(n, require_2connected=True)
    assert r2.f == FROZEN_F2[n] <= r.f
    for res in (r, r2):
        sp = enumerate_cycles(res.witness)
        assert sp.distinct
        assert res.witness.m == res.best_edge_count
        assert tuple(sorted(sp.lengths)) == res.spectrum
    assert is_two_connected(r2.witness)


def test_exact_f_n8_equals_formula():
    r = exact_f(8)
    assert r.proven_optimal and r.f == shi_formula(8) == 2


def test_n5_witness_is_c5_plus_chord():
    r = exact_f(5)
    w = r.witness
    assert w.m == 6 and r.spectrum == (3, 4, 5)
    chorded_c5 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
    assert canonical_form(w) == canonical_form(chorded_c5)


def test_triangle():
    r = exact_f(3)
    assert r.f == 0 and canonical_form(r.witness) == canonical_form(Graph.complete(3))


@pytest.mark.parametrize("n", range(3, 8))
def test_pancyclic_counts(n):
    res = uniquely_pancyclic_search(n)
    assert res.complete
    assert len(res.graphs) == FROZEN_UPC[n]
    for g in res.graphs:
        assert tuple(sorted(enumerate_cycles(g).lengths)) == tuple(range(3, n + 1))


def test_pancyclic_n8():
    res = uniquely_pancyclic_search(8)
    assert res.complete and len(res.graphs) == 2
    assert len({canonical_form(g) for g in res.graphs}) == 2


def test_budget_cutoff():
    r = exact_f(8, budget=20)
    assert not r.proven_optimal
    assert r.nodes_explored == 20
    assert not uniquely_pancyclic_search(8, budget=5).complete


def test_budget_from_environment(monkeypatch):
    monkeypatch.setenv("CYCLELENS_BUDGET", "7")
    assert exact_f(7).nodes_explored == 7


def test_deterministic():
    a, b = exact_f(7), exact_f(7)
    assert a.witness == b.witness and a.nodes_explored == b.nodes_explored


def test_bad_n():
    with pytest.raises(InvalidInput):
        exact_f(2)
    with pytest.raises(InvalidInput):
        uniquely_pancyclic_search(1)


@pytest.mark.slow
@pytest.mark.parametrize("n", [9, 10])
def test_exact_f_beyond_ci_range(n):
    r = exact_f(n)
    assert r.proven_optimal and r.f == shi_formula(n) == 2
