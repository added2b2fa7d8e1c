"""Feasible triples and quadruples of the path family, the sets W_ij, and the
membership tests that sort the remaining paths around a type-I or type-II pair.

A tuple of paths is feasible when ``{uv}`` plus the union of its paths holds a
cycle that, for every member alpha, uses an edge of P_alpha lying on no other
member (unless no such private edge exists).  The union of at most four paths
is tiny, so all of its cycles are enumerated and filtered.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Literal

from .cycles import Cycle, cycle_edges, iter_cycles
from .ears import PathFamily
from .errors import BudgetExceeded, InvalidInput, WrongPairType
from .graph import Graph, norm_edge

DEFAULT_TUPLE_BUDGET = 200_000


def private_edges(fam: PathFamily, idx) -> dict[int, frozenset]:
    """For each alpha in idx: edges of P_alpha on no other path of idx."""
    out = {}
    for a in idx:
        others = set()
        for b in idx:
            if b != a:
                others |= fam.edge_sets[b]
        out[a] = fam.ear_edges[a] - others
    return out


def union_graph(fam: PathFamily, idx) -> Graph:
    edges = {norm_edge(fam.u, fam.v)}
    for a in idx:
        edges |= fam.edge_sets[a]
    return Graph(fam.graph.n, tuple(edges))


def feasible_cycle(fam: PathFamily, idx) -> Cycle | None:
    """First cycle (in enumeration order) meeting every private-edge condition."""
    idx = tuple(idx)
    if len(set(idx)) != len(idx):
        raise InvalidInput("feasibility needs distinct path indices")
    for a in idx:
        if not 0 <= a <= fam.s:
            raise InvalidInput(f"path index {a} out of range")
    need = [p for p in private_edges(fam, idx).values() if p]
    for c in iter_cycles(union_graph(fam, idx)):
        ce = cycle_edges(c)
        if all(ce & p for p in need):
            return c
    return None


def feasible_triple(fam: PathFamily, i: int, j: int, l: int) -> Cycle | None:
    return feasible_cycle(fam, (i, j, l))


def feasible_quadruple(fam: PathFamily, i: int, j: int, k: int, l: int) -> Cycle | None:
    return feasible_cycle(fam, (i, j, k, l))


@dataclass
class FeasibilityIndex:
    """Every feasible triple and quadruple of a family, with witnesses."""

    triples: dict[tuple[int, ...], Cycle]
    quadruples: dict[tuple[int, ...], Cycle]
    s: int

    def w_set(self, i: int, j: int) -> tuple[int, ...]:
        if i == j:
            raise InvalidInput("W needs two distinct paths")
        out = set()
        for t in self.triples:
            if i in t and j in t:
                out.update(t)
        for q in self.quadruples:
            if i in q and j in q:
                out.update(q)
        out -= {i, j}
        return tuple(sorted(out))

    def w_sets(self) -> dict[tuple[int, int], tuple[int, ...]]:
        return {(i, j): self.w_set(i, j) for i, j in combinations(range(self.s + 1), 2)}

    def w_total(self) -> int:
        return sum(len(w) for w in self.w_sets().values())

    def counts(self) -> dict[str, int]:
        return {
            "feasible_triples": len(self.triples),
            "feasible_quadruples": len(self.quadruples),
            "w_total": self.w_total(),
        }


def feasibility_index(fam: PathFamily, budget: int | None = None) -> FeasibilityIndex:
    """All feasible tuples of ``fam``; cached on the family.

    ``budget`` caps the number of tuples examined.
    """
    cached = fam.__dict__.get("_feasibility")
    if cached is not None:
        return cached
    budget = DEFAULT_TUPLE_BUDGET if budget is None else budget
    size = fam.s + 1
    work = comb(size, 3) + comb(size, 4)
    if work > budget:
        raise BudgetExceeded(f"{work} tuples to examine, budget is {budget}")
    triples = {}
    quads = {}
    for t in combinations(range(size), 3):
        c = feasible_cycle(fam, t)
        if c is not None:
            triples[t] = c
    for q in combinations(range(size), 4):
        c = feasible_cycle(fam, q)
        if c is not None:
            quads[q] = c
    res = FeasibilityIndex(triples, quads, fam.s)
    fam.__dict__["_feasibility"] = res
    return res


def w_set(fam: PathFamily, i: int, j: int, budget: int | None = None) -> tuple[int, ...]:
    return feasibility_index(fam, budget).w_set(i, j)


# -- the paths around a type-I pair --------------------------------------------

MN = Literal["M", "N", "neither"]
AB = Literal["A", "B", "neither"]


def outside_runs(fam: PathFamily, l: int, edges: frozenset) -> list[tuple[int, ...]]:
    """Maximal subpaths of f_l made of edges not in ``edges``."""
    p = fam.paths[l]
    runs = []
    cur: list[int] | None = None
    for a, b in zip(p, p[1:]):
        if norm_edge(a, b) in edges:
            if cur:
                runs.append(tuple(cur))
            cur = None
        else:
            if cur is None:
                cur = [a]
            cur.append(b)
    if cur:
        runs.append(tuple(cur))
    return runs


def mn_membership(fam: PathFamily, i: int, j: int, l: int) -> MN:
    """Where f_l sits relative to the type-I pair {f_i, f_j} with base f_k.

    With splitting vertices a < b <= c < d, f_l must leave f_i + f_j along a
    single detour x..y.  "M": the detour ends by c, f_l follows f_i from c
    on, and either x <= a < b <= y or x, y both lie on a f_i b or on a f_j b.
    "N" mirrors this on the right: the detour starts at or after b, f_l
    follows f_j up to b, and either x <= c < d <= y or x, y both lie on
    c f_i d or on c f_j d.
    """
    cl = fam.classify(i, j)
    if cl.kind != "type-I":
        raise WrongPairType(f"pair ({i}, {j}) is {cl.kind}, not type-I")
    i, j, k = cl.i, cl.j, cl.base
    if l in (i, j, k):
        return "neither"
    a, b, c, d = cl.splitting
    runs = outside_runs(fam, l, fam.edge_sets[i] | fam.edge_sets[j])
    if len(runs) != 1:
        return "neither"
    x, y = runs[0][0], runs[0][-1]
    r = fam.rank
    on_l = fam.positions[l]

    def within(i_, p, q):
        seg = set(fam.subpath(i_, p, q))
        return x in seg and y in seg

    if r[y] <= r[c] and c in on_l and fam.subpath(l, c, fam.v) == fam.subpath(i, c, fam.v):
        if (r[x] <= r[a] and r[b] <= r[y]) or within(i, a, b) or within(j, a, b):
            return "M"
    if r[b] <= r[x] and b in on_l and fam.subpath(l, fam.u, b) == fam.subpath(j, fam.u, b):
        if (r[x] <= r[c] and r[d] <= r[y]) or within(i, c, d) or within(j, c, d):
            return "N"
    return "neither"


def ab_membership(fam: PathFamily, i: int, j: int, l: int) -> AB:
    """Where f_l sits relative to the type-II pair {f_i, f_j} with base f_k.

    Let f_p be the member whose primary segment against f_k runs a..c and f_q
    the one running b..d.  "A": f_l leaves f_p once, at splitting vertices x,
    y on a f_p c, along a detour whose inner vertices avoid f_k and f_q.
    "B" is the same with the roles of f_p and f_q swapped.
    """
    cl = fam.classify(i, j)
    if cl.kind != "type-II":
        raise WrongPairType(f"pair ({i}, {j}) is {cl.kind}, not type-II")
    k = cl.base
    if l in (cl.i, cl.j, k):
        return "neither"
    a, b, c, d = cl.splitting
    p = cl.leading
    q = cl.j if p == cl.i else cl.i
    for label, own, other, lo, hi in (("A", p, q, a, c), ("B", q, p, b, d)):
        bl = fam.blocks(l, own)
        if len(bl) != 1:
            continue
        x, y, detour = bl[0].start, bl[0].end, bl[0].seg_i
        seg = set(fam.subpath(own, lo, hi))
        if x not in seg or y not in seg:
            continue
        if set(detour[1:-1]) & (fam.vertex_sets[k] | fam.vertex_sets[other]):
            continue
        return label
    return "neither"

