"""Executable checks of the structural facts about the path family.

Each checker returns a :class:`Check` holding how many instances it examined
and a description of every violation.  The checks in ``UNCONDITIONAL`` hold
for every 2-connected graph.  Those in ``CONDITIONAL`` are only claimed for
graphs with at most ``n - 2`` cycles; :func:`check_propositions` skips them
on other inputs unless asked.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations

from .cycles import enumerate_cycles
from .ears import PathFamily, path_edges
from .errors import CapExceeded
from .feasible import ab_membership, feasibility_index, mn_membership

UNCONDITIONAL = (
    "ancestor_order",
    "tree_parts_acyclic",
    "ear_off_other_paths",
    "increasing_paths",
    "difference_cycles",
    "type_one_base",
    "pair_covers_ear",
    "triple_cover_reduces",
    "type_two_shape",
    "trichotomy",
)
CONDITIONAL = ("feasible_counts", "w_bound", "type_one_neighbors", "type_two_neighbors")
ALL_CHECKS = UNCONDITIONAL + CONDITIONAL


@dataclass
class Check:
    name: str
    checked: int = 0
    violations: list[str] = field(default_factory=list)
    skipped: str | None = None

    @property
    def passed(self) -> bool:
        return not self.violations

    def fail(self, msg: str):
        self.violations.append(msg)

    def to_dict(self) -> dict:
        d = {"name": self.name, "passed": self.passed, "checked": self.checked}
        if self.violations:
            d["violations"] = self.violations[:20]
        if self.skipped:
            d["skipped"] = self.skipped
        return d


def _acyclic(edges) -> bool:
    parent: dict[int, int] = {}

    def find(x):
        while parent.get(x, x) != x:
            parent[x] = parent.get(parent[x], parent[x])
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def ancestor_order(fam: PathFamily) -> Check:
    """Ancestors in L (toward u) and R (toward v) appear on earlier ears."""
    ch = Check("ancestor_order")
    first = fam.decomposition.first_ear
    for y in range(fam.graph.n):
        for x in set(fam.l_path(y)) | set(fam.r_path(y)):
            ch.checked += 1
            if first[x] > first[y]:
                ch.fail(f"x={x} (ear {first[x]}) is an ancestor of y={y} (ear {first[y]})")
    return ch


def tree_parts_acyclic(fam: PathFamily) -> Check:
    """L_i + R_j never closes a cycle (i, j >= 1)."""
    ch = Check("tree_parts_acyclic")
    for i in range(1, fam.s + 1):
        for j in range(1, fam.s + 1):
            ch.checked += 1
            if not _acyclic(fam.l_parts[i] | fam.r_parts[j]):
                ch.fail(f"L_{i} + R_{j} has a cycle")
    return ch


def ear_off_other_paths(fam: PathFamily) -> Check:
    """No ear P_i lies entirely on another path f_j."""
    ch = Check("ear_off_other_paths")
    for i, j in permutations(fam.indices(), 2):
        ch.checked += 1
        if fam.ear_edges[i] <= fam.edge_sets[j]:
            ch.fail(f"P_{i} lies on f_{j}")
    return ch


def increasing_paths(fam: PathFamily) -> Check:
    """Every f_i is a u-v path climbing the linear order."""
    ch = Check("increasing_paths")
    g = fam.graph
    for i in fam.indices():
        ch.checked += 1
        p = fam.paths[i]
        ranks = [fam.rank[x] for x in p]
        ok = (
            p[0] == fam.u
            and p[-1] == fam.v
            and len(set(p)) == len(p)
            and all(g.has_edge(a, b) for a, b in zip(p, p[1:]))
            and ranks == sorted(ranks)
        )
        if not ok:
            ch.fail(f"f_{i} is not an increasing u-v path")
    return ch


def difference_cycles(fam: PathFamily) -> Check:
    """f_i + f_j is one or two cycles, each meeting P_i or P_j, and
    neither ear meets both."""
    ch = Check("difference_cycles")
    for i, j in combinations(fam.indices(), 2):
        ch.checked += 1
        bl = fam.blocks(i, j)
        cycles = [b.cycle_edges for b in bl]
        if not 1 <= len(bl) <= 2:
            ch.fail(f"f_{i} + f_{j} has {len(bl)} cycles")
            continue
        if frozenset().union(*cycles) != fam.symmetric_difference(i, j):
            ch.fail(f"blocks of ({i}, {j}) do not cover the symmetric difference")
        pij = fam.ear_edges[i] | fam.ear_edges[j]
        if any(not (c & pij) for c in cycles):
            ch.fail(f"a cycle of f_{i} + f_{j} avoids P_{i} and P_{j}")
        for a in (i, j):
            if sum(1 for c in cycles if c & fam.ear_edges[a]) > 1:
                ch.fail(f"P_{a} meets both cycles of f_{i} + f_{j}")
    return ch


def type_one_base(fam: PathFamily) -> Check:
    """Two-cycle pairs: the ears sit in the outer blocks and an earlier
    path f_k = u f_j c + c f_i v has b, c as inner vertices of P_k."""
    ch = Check("type_one_base")
    for i, j in combinations(fam.indices(), 2):
        if len(fam.blocks(i, j)) != 2:
            continue
        ch.checked += 1
        a, b, c, d = fam.splitting_vertices(i, j)
        if not fam.ear_edges[i] <= path_edges(fam.subpath(i, a, b)):
            ch.fail(f"({i}, {j}): P_{i} not inside a f_i b")
        if not fam.ear_edges[j] <= path_edges(fam.subpath(j, c, d)):
            ch.fail(f"({i}, {j}): P_{j} not inside c f_j d")
        target = fam.subpath(j, fam.u, c) + fam.subpath(i, c, fam.v)[1:]
        ks = [k for k in range(i) if fam.paths[k] == target]
        if not ks:
            ch.fail(f"({i}, {j}): no earlier path equals u f_j c + c f_i v")
            continue
        inner = set(fam.decomposition.ears[ks[0]][1:-1])
        if b not in inner or c not in inner:
            ch.fail(f"({i}, {j}): b, c not inner on P_{ks[0]}")
    return ch


def pair_covers_ear(fam: PathFamily) -> Check:
    """If P_l lies on f_i + f_j, the pair is type-I with base l."""
    ch = Check("pair_covers_ear")
    for i, j in combinations(fam.indices(), 2):
        both = fam.edge_sets[i] | fam.edge_sets[j]
        for l in fam.indices():
            if l in (i, j) or not fam.ear_edges[l] <= both:
                continue
            ch.checked += 1
            cl = fam.classify(i, j)
            if cl.kind != "type-I" or cl.base != l:
                ch.fail(f"P_{l} inside f_{i} + f_{j} but the pair is {cl.kind} with base {cl.base}")
    return ch


def triple_cover_reduces(fam: PathFamily) -> Check:
    """If P_l lies on three paths' union, two of them already cover it
    as a type-I base."""
    ch = Check("triple_cover_reduces")
    for trio in combinations(fam.indices(), 3):
        cover = fam.edge_sets[trio[0]] | fam.edge_sets[trio[1]] | fam.edge_sets[trio[2]]
        for l in fam.indices():
            if l in trio or not fam.ear_edges[l] <= cover:
                continue
            ch.checked += 1
            ok = False
            for a, b in combinations(trio, 2):
                if fam.ear_edges[l] <= fam.edge_sets[a] | fam.edge_sets[b]:
                    cl = fam.classify(a, b)
                    ok = ok or (cl.kind == "type-I" and cl.base == l)
            if not ok:
                ch.fail(f"P_{l} inside f_{trio} but no sub-pair covers it as a type-I base")
    return ch


def type_two_shape(fam: PathFamily) -> Check:
    """Type-II pairs are the base with one detour each, a..c and b..d,
    and P_k has an edge between b and c."""
    ch = Check("type_two_shape")
    u, v = fam.u, fam.v
    for cl in fam.classification_matrix().values():
        if cl.kind != "type-II":
            continue
        ch.checked += 1
        k = cl.base
        a, b, c, d = cl.splitting
        p = cl.leading
        q = cl.j if p == cl.i else cl.i
        want_p = fam.subpath(k, u, a) + fam.subpath(p, a, c)[1:] + fam.subpath(k, c, v)[1:]
        want_q = fam.subpath(k, u, b) + fam.subpath(q, b, d)[1:] + fam.subpath(k, d, v)[1:]
        if fam.paths[p] != want_p:
            ch.fail(f"({cl.i}, {cl.j}): f_{p} != u f_k a + a f_{p} c + c f_k v (k={k})")
        if fam.paths[q] != want_q:
            ch.fail(f"({cl.i}, {cl.j}): f_{q} != u f_k b + b f_{q} d + d f_k v (k={k})")
        if not fam.ear_edges[k] & path_edges(fam.subpath(k, b, c)):
            ch.fail(f"({cl.i}, {cl.j}): P_{k} misses b f_k c")
    return ch


def trichotomy(fam: PathFamily) -> Check:
    """Recompute each pair's type from first principles and compare."""
    ch = Check("trichotomy")
    r = fam.rank
    for i, j in combinations(fam.indices(), 2):
        ch.checked += 1
        two = len(fam.blocks(i, j)) == 2
        crossing = []
        for l in fam.indices():
            if l in (i, j):
                continue
            si, sj = fam.primary_segment(i, l), fam.primary_segment(j, l)
            if si is None or sj is None:
                continue
            for s1, s2 in ((si, sj), (sj, si)):
                if r[s1[0]] < r[s2[0]] < r[s1[-1]] < r[s2[-1]]:
                    crossing.append(l)
                    break
        flags = {"type-I": two, "type-II": not two and bool(crossing), "normal": not two and not crossing}
        if sum(flags.values()) != 1:
            ch.fail(f"({i}, {j}) matches {sum(flags.values())} kinds")
            continue
        cl = fam.classify(i, j)
        if not flags[cl.kind]:
            ch.fail(f"({i}, {j}) classified {cl.kind}, recomputed otherwise")
        if cl.kind == "type-II" and cl.base != min(crossing):
            ch.fail(f"({i}, {j}) base {cl.base}, least crossing path {min(crossing)}")
    return ch


def feasible_counts(fam: PathFamily, budget=None) -> Check:
    """At most n feasible triples and 4n feasible quadruples."""
    ch = Check("feasible_counts")
    idx = feasibility_index(fam, budget)
    n = fam.graph.n
    ch.checked = 2
    if len(idx.triples) > n:
        ch.fail(f"{len(idx.triples)} feasible triples > n = {n}")
    if len(idx.quadruples) > 4 * n:
        ch.fail(f"{len(idx.quadruples)} feasible quadruples > 4n = {4 * n}")
    return ch


def w_bound(fam: PathFamily, budget=None) -> Check:
    """The sizes |W_ij| sum to at most 51n."""
    ch = Check("w_bound")
    total = feasibility_index(fam, budget).w_total()
    ch.checked = 1
    if total > 51 * fam.graph.n:
        ch.fail(f"sum of |W_ij| = {total} > 51n = {51 * fam.graph.n}")
    return ch


def type_one_neighbors(fam: PathFamily, budget=None) -> Check:
    """Around a type-I pair, a path forming an infeasible triple with
    it has the M or N shape."""
    ch = Check("type_one_neighbors")
    idx = feasibility_index(fam, budget)
    for cl in fam.classification_matrix().values():
        if cl.kind != "type-I":
            continue
        for l in fam.indices():
            if l in (cl.i, cl.j, cl.base):
                continue
            if tuple(sorted((cl.i, cl.j, l))) in idx.triples:
                continue
            ch.checked += 1
            if mn_membership(fam, cl.i, cl.j, l) == "neither":
                ch.fail(f"({cl.i}, {cl.j}) type-I, triple with {l} infeasible, f_{l} in neither M nor N")
    return ch


def type_two_neighbors(fam: PathFamily, budget=None) -> Check:
    """Around a type-II pair, a path outside W_ij has the A or B shape."""
    ch = Check("type_two_neighbors")
    idx = feasibility_index(fam, budget)
    for cl in fam.classification_matrix().values():
        if cl.kind != "type-II":
            continue
        w = set(idx.w_set(cl.i, cl.j))
        for l in fam.indices():
            if l in (cl.i, cl.j, cl.base) or l in w:
                continue
            ch.checked += 1
            if ab_membership(fam, cl.i, cl.j, l) == "neither":
                ch.fail(f"({cl.i}, {cl.j}) type-II, f_{l} outside W but in neither A nor B")
    return ch


CHECKS = {
    "ancestor_order": ancestor_order,
    "tree_parts_acyclic": tree_parts_acyclic,
    "ear_off_other_paths": ear_off_other_paths,
    "increasing_paths": increasing_paths,
    "difference_cycles": difference_cycles,
    "type_one_base": type_one_base,
    "pair_covers_ear": pair_covers_ear,
    "triple_cover_reduces": triple_cover_reduces,
    "type_two_shape": type_two_shape,
    "trichotomy": trichotomy,
    "feasible_counts": feasible_counts,
    "w_bound": w_bound,
    "type_one_neighbors": type_one_neighbors,
    "type_two_neighbors": type_two_neighbors,
}


def few_cycles(fam: PathFamily) -> bool:
    """True iff the graph has at most n - 2 cycles."""
    try:
        enumerate_cycles(fam.graph, cap=fam.graph.n - 2)
    except CapExceeded:
        return False
    return True


def check_propositions(fam: PathFamily, names=None, force_conditional=False, budget=None) -> list[Check]:
    """Run the named checks (all by default).

    Conditional checks run only when the graph has at most n - 2 cycles, or
    when ``force_conditional`` is set; otherwise they come back skipped.
    """
    names = list(ALL_CHECKS if names is None else names)
    low = None
    out = []
    for name in names:
        fn = CHECKS[name]
        if name in CONDITIONAL and not force_conditional:
            if low is None:
                low = few_cycles(fam)
            if not low:
                out.append(Check(name, skipped="graph has more than n - 2 cycles"))
                continue
        out.append(fn(fam, budget) if name in CONDITIONAL else fn(fam))
    return out
