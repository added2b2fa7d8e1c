from itertools import combinations

import networkx as nx
import pytest

from cyclelens.construct import bcfy_construct
from cyclelens.ears import analyze
from cyclelens.errors import BudgetExceeded, InvalidInput, WrongPairType
from cyclelens.feasible import (
    ab_membership,
    feasibility_index,
    feasible_cycle,
    feasible_quadruple,
    feasible_triple,
    mn_membership,
    w_set,
)
from cyclelens.graph import norm_edge


def nx_feasible(fam, idx) -> bool:
    """Independent route: networkx cycle enumeration of the union, then the
    private-edge filter written out directly."""
    h = nx.Graph()
    h.add_edge(fam.u, fam.v)
    for a in idx:
        h.add_edges_from(fam.edge_sets[a])
    for cyc in nx.simple_cycles(h):
        if len(cyc) < 3:
            continue
        ce = {norm_edge(cyc[k], cyc[(k + 1) % len(cyc)]) for k in range(len(cyc))}
        ok = True
        for a in idx:
            others = set().union(*(fam.edge_sets[b] for b in idx if b != a))
            private = fam.ear_edges[a] - others
            if private and not ce & private:
                ok = False
                break
        if ok:
            return True
    return False


def small_families(corpus):
    for name, g, uv in corpus:
        fam = analyze(g, uv)
        if 3 <= fam.s + 1 <= 7:
            yield name, fam


def test_feasibility_matches_networkx_route(corpus):
    tried = 0
    for name, fam in small_families(corpus):
        size = fam.s + 1
        for k in (3, 4):
            for idx in combinations(range(size), k):
                c = feasible_cycle(fam, idx)
                assert (c is not None) == nx_feasible(fam, idx), (name, idx)
                tried += 1
    assert tried > 200


def test_witness_meets_every_condition(corpus):
    for name, fam in list(small_families(corpus))[:20]:
        idx = feasibility_index(fam)
        for t, cyc in list(idx.triples.items()) + list(idx.quadruples.items()):
            ce = {norm_edge(cyc[k], cyc[(k + 1) % len(cyc)]) for k in range(len(cyc))}
            assert ce <= fam.edge_sets[t[0]] | set().union(*(fam.edge_sets[a] for a in t)) | {norm_edge(fam.u, fam.v)}
            for a in t:
                others = set().union(*(fam.edge_sets[b] for b in t if b != a))
                private = fam.ear_edges[a] - others
                assert not private or ce & private


def test_type_one_pairs_give_degenerate_feasible_triples(corpus):
    seen = 0
    for name, fam in small_families(corpus):
        for (i, j), cl in fam.classification_matrix().items():
            if cl.kind == "type-I" and cl.base is not None:
                assert feasible_triple(fam, i, j, cl.base) is not None
                seen += 1
    assert seen > 0


def test_w_set_definition(corpus):
    for name, fam in list(small_families(corpus))[:15]:
        size = fam.s + 1
        for i, j in combinations(range(size), 2):
            want = set()
            for l in range(size):
                if l in (i, j):
                    continue
                if nx_feasible(fam, (i, j, l)):
                    want.add(l)
                for k in range(size):
                    if k not in (i, j, l) and nx_feasible(fam, (i, j, k, l)):
                        want.add(l)
            assert set(w_set(fam, i, j)) == want


def test_guards():
    fam = analyze(bcfy_construct(3).graph, (0, 1))
    with pytest.raises(InvalidInput):
        feasible_triple(fam, 0, 0, 1)
    with pytest.raises(InvalidInput):
        feasible_quadruple(fam, 0, 1, 2, 7)
    with pytest.raises(InvalidInput):
        feasibility_index(fam).w_set(1, 1)
    big = analyze(bcfy_construct(5).graph, (0, 1))
    with pytest.raises(BudgetExceeded):
        feasibility_index(big, budget=3)


def test_membership_type_guards(corpus):
    checked = 0
    for name, fam in small_families(corpus):
        for (i, j), cl in fam.classification_matrix().items():
            if cl.kind != "type-I":
                with pytest.raises(WrongPairType):
                    mn_membership(fam, i, j, 0)
            else:
                for l in (i, j, cl.base):
                    if l is not None:
                        assert mn_membership(fam, i, j, l) == "neither"
                checked += 1
            if cl.kind != "type-II":
                with pytest.raises(WrongPairType):
                    ab_membership(fam, i, j, 0)
            else:
                assert ab_membership(fam, i, j, cl.base) == "neither"
                checked += 1
    assert checked > 0
