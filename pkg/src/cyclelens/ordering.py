"""Separators, edge degrees, the high-degree trees, the path arrangement with
its fences and intervals, and the cycle-length counting audit.

Everything here works on a subset of the path family (given as indices).
Vertex comparisons use the linear order of the ear decomposition.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations

from .cycles import iter_cycles
from .ears import PathFamily, path_edges
from .errors import InvalidInput
from .feasible import feasibility_index
from .graph import Edge, Graph, norm_edge
from .props import Check

# -- separator ----------------------------------------------------------------


@dataclass(frozen=True)
class SeparatorFamily:
    """A subset of paths, the vertices u0, v0 confining their variation, and
    the varying subgraph (edges on some but not all of the paths)."""

    paths: tuple[int, ...]
    u0: int
    v0: int
    varying: frozenset[Edge]

    def to_dict(self) -> dict:
        return {
            "paths": list(self.paths),
            "u0": self.u0,
            "v0": self.v0,
            "varying_edges": [list(e) for e in sorted(self.varying)],
        }


def _subset(fam: PathFamily, subset) -> tuple[int, ...]:
    idx = tuple(sorted(set(fam.indices() if subset is None else subset)))
    if not idx:
        raise InvalidInput("path subset must be nonempty")
    for i in idx:
        if not 0 <= i <= fam.s:
            raise InvalidInput(f"path index {i} out of range")
    return idx


def varying_edges(fam: PathFamily, subset=None) -> frozenset[Edge]:
    """Edges on some but not all paths of the subset."""
    sets = [fam.edge_sets[i] for i in _subset(fam, subset)]
    return frozenset().union(*sets) - frozenset.intersection(*sets)


def separator(fam: PathFamily, subset=None) -> SeparatorFamily:
    """u0 ends the longest common prefix, v0 starts the longest common suffix.

    A single path varies nowhere; its separator is reported as (u, u).
    """
    idx = _subset(fam, subset)
    var = varying_edges(fam, idx)
    if len(idx) == 1:
        return SeparatorFamily(idx, fam.u, fam.u, var)
    ps = [fam.paths[i] for i in idx]
    t = 0
    while all(p[t] == ps[0][t] for p in ps):
        t += 1
    u0 = ps[0][t - 1]
    t = 1
    while all(p[-t] == ps[0][-t] for p in ps):
        t += 1
    v0 = ps[0][-(t - 1)]
    return SeparatorFamily(idx, u0, v0, var)


def _span(fam: PathFamily, subset, x, y) -> frozenset[Edge]:
    return frozenset().union(*(path_edges(fam.subpath(i, x, y)) for i in subset))


def verify_separator(fam: PathFamily, sep: SeparatorFamily) -> bool:
    """Brute force: (u0, v0) confines the variation, and no other pair of
    common vertices that also confines it spans fewer edges."""
    common = set.intersection(*(set(fam.paths[i]) for i in sep.paths))
    if sep.u0 not in common or sep.v0 not in common:
        return False
    if not sep.varying:
        return True
    best = _span(fam, sep.paths, sep.u0, sep.v0)
    if not sep.varying <= best:
        return False
    r = fam.rank
    for x in common:
        for y in common:
            if r[x] < r[y]:
                span = _span(fam, sep.paths, x, y)
                if sep.varying <= span and not best <= span:
                    return False
    return True


# -- degrees and the band [beta, gamma] ----------------------------------------


@dataclass(frozen=True)
class DegreeProfile:
    degree: dict[Edge, int]
    beta: float
    gamma: float
    band_count: int  # varying edges with beta <= d(e) <= gamma
    A: int
    alphas: tuple[float, ...]
    j0: int | None
    fallback: bool

    def to_dict(self) -> dict:
        return {
            "beta": self.beta,
            "gamma": self.gamma,
            "band_count": self.band_count,
            "A": self.A,
            "alphas": list(self.alphas),
            "j0": self.j0,
            "fallback": self.fallback,
            "degree_histogram": self.histogram(),
        }

    def histogram(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for d in self.degree.values():
            out[d] = out.get(d, 0) + 1
        return dict(sorted(out.items()))


def band_parameters(n: int):
    """``(A, alphas)`` with ``alpha_j = n^(1/4) (log n)^(j+1)``, logs base 2."""
    if n < 5:
        return 0, ()
    ln = math.log2(n)
    A = math.ceil(ln / (4 * math.log2(ln))) - 2
    alphas = tuple(n**0.25 * ln ** (j + 1) for j in range(max(A, 0) + 1))
    return A, alphas


def degree_profile(fam: PathFamily, sep: SeparatorFamily, beta=None, gamma=None) -> DegreeProfile:
    """Degrees d(e) over the varying edges and the band with fewest edges.

    When the band count A is below 1 (every graph of practical size), the
    single band [1, |P|] is used.  Explicit ``beta``/``gamma`` override both.
    """
    deg = {e: sum(1 for i in sep.paths if e in fam.edge_sets[i]) for e in sep.varying}
    A, alphas = band_parameters(fam.graph.n)

    def count(lo, hi):
        return sum(1 for d in deg.values() if lo <= d <= hi)

    j0 = None
    fallback = A < 1
    if fallback:
        b, g = 1.0, float(len(sep.paths))
    else:
        j0 = min(range(1, A + 1), key=lambda j: (count(alphas[j - 1], alphas[j]), j))
        b, g = alphas[j0 - 1], alphas[j0]
    if beta is not None:
        b = float(beta)
    if gamma is not None:
        g = float(gamma)
    if b <= 0 or g < b:
        raise InvalidInput("need 0 < beta <= gamma")
    return DegreeProfile(deg, b, g, count(b, g), A, alphas, j0, fallback)


# -- the trees of high-degree edges --------------------------------------------


def _side(fam: PathFamily, j: int, e: Edge) -> set[str]:
    sides = set()
    if e in fam.l_parts[j] or (e in fam.ear_edges[j] and e in fam.l_tree_edges):
        sides.add("L")
    if e in fam.r_parts[j] or (e in fam.ear_edges[j] and e in fam.r_tree_edges):
        sides.add("R")
    return sides


def high_degree_trees(fam: PathFamily, sep: SeparatorFamily, prof: DegreeProfile):
    """Split varying edges with d(e) >= gamma by the side of each containing path.

    Returns ``(L_edges, R_edges, mixed)``.  An edge goes to L when every path
    through it carries it on its L-side (inside uL l_j, or on P_j within the
    tree L); R likewise.  Edges fitting neither are returned as ``mixed``.
    """
    left, right, mixed = set(), set(), set()
    for e, d in prof.degree.items():
        if d < prof.gamma:
            continue
        holders = [j for j in sep.paths if e in fam.edge_sets[j]]
        if all("L" in _side(fam, j, e) for j in holders):
            left.add(e)
        elif all("R" in _side(fam, j, e) for j in holders):
            right.add(e)
        else:
            mixed.add(e)
    return frozenset(left), frozenset(right), frozenset(mixed)


def _child(parent: dict[int, int], e: Edge) -> int:
    a, b = e
    return a if parent.get(a) == b else b


def leaf_edges(parent: dict[int, int], edges: frozenset[Edge]) -> frozenset[Edge]:
    """Edges of a rooted subtree whose lower endpoint has no child edge in it."""
    has_child = {parent[_child(parent, e)] for e in edges}
    return frozenset(e for e in edges if _child(parent, e) not in has_child)


def tree_path_edges(parent: dict[int, int], a: int, b: int) -> frozenset[Edge]:
    """Edges of the tree path between a and b."""
    up_a = [a]
    while up_a[-1] in parent:
        up_a.append(parent[up_a[-1]])
    seen = {x: t for t, x in enumerate(up_a)}
    up_b = [b]
    while up_b[-1] not in seen:
        up_b.append(parent[up_b[-1]])
    top = seen[up_b[-1]]
    chain = up_a[: top + 1] + list(reversed(up_b[:-1]))
    return path_edges(tuple(chain))


def check_high_degree_trees(fam, sep, left, right, mixed) -> Check:
    """L-edges form a subtree of L hanging from u0, R-edges one of R hanging
    from v0, the two share no edge, and no high-degree edge is mixed."""
    ch = Check("high_degree_trees", checked=1)
    if mixed:
        ch.fail(f"{len(mixed)} high-degree edges lie on L-sides and R-sides: {sorted(mixed)[:3]}")
    if left & right:
        ch.fail("L and R trees share edges")
    for edges, parent, root, name in ((left, fam.l_parent, sep.u0, "L"), (right, fam.r_parent, sep.v0, "R")):
        for e in edges:
            x = _child(parent, e)
            if parent.get(x) not in e:
                ch.fail(f"{e} is not an edge of {name}")
                continue
            up = parent[x]
            if up != root and norm_edge(up, parent.get(up, up)) not in edges:
                ch.fail(f"{name}-edge {e} does not hang from {root} inside the tree")
    return ch


# -- arrangement -----------------------------------------------------------------


@dataclass
class OrderedFamily:
    fam: PathFamily
    sep: SeparatorFamily
    profile: DegreeProfile
    arrangement: tuple[int, ...]  # g_1, g_2, ... as path indices
    left: frozenset[Edge]
    right: frozenset[Edge]
    mixed: frozenset[Edge]
    transforming_left: frozenset[Edge]
    transforming_right: frozenset[Edge]
    fences: tuple[int, ...] = field(default=())  # 1-based positions
    intervals: tuple[tuple[int, ...], ...] = field(default=())  # positions per interval

    def to_dict(self) -> dict:
        return {
            "separator": self.sep.to_dict(),
            "profile": self.profile.to_dict(),
            "arrangement": list(self.arrangement),
            "L_tree": [list(e) for e in sorted(self.left)],
            "R_tree": [list(e) for e in sorted(self.right)],
            "mixed_edges": [list(e) for e in sorted(self.mixed)],
            "transforming_edges": {
                "L": [list(e) for e in sorted(self.transforming_left)],
                "R": [list(e) for e in sorted(self.transforming_right)],
            },
            "fences": list(self.fences),
            "intervals": [[self.arrangement[p - 1] for p in iv] for iv in self.intervals],
        }

    @property
    def transforming(self) -> frozenset[Edge]:
        return self.transforming_left | self.transforming_right

    def interval_of(self) -> dict[int, int]:
        """Position (1-based) to interval number."""
        return {p: k for k, iv in enumerate(self.intervals) for p in iv}


def first_split(fam: PathFamily, i: int, j: int) -> int:
    return fam.splitting_vertices(i, j)[0]


def last_split(fam: PathFamily, i: int, j: int) -> int:
    return fam.splitting_vertices(i, j)[-1]


def _contains(fam: PathFamily, i: int, edges: frozenset[Edge]) -> bool:
    return edges <= fam.edge_sets[i]


def order_paths(fam: PathFamily, sep: SeparatorFamily, prof: DegreeProfile) -> OrderedFamily:
    """Arrange the subset greedily, keeping long shared prefixes together.

    Each step takes the candidates sharing the longest L-prefix with the last
    placed path, then among those the ones sharing the longest R-suffix,
    prefers paths carrying a not-yet-passed leaf edge of the L tree, then of
    the R tree, and finally picks the smallest index.
    """
    left, right, mixed = high_degree_trees(fam, sep, prof)
    t_left = leaf_edges(fam.l_parent, left)
    t_right = leaf_edges(fam.r_parent, right)
    r = fam.rank
    remaining = list(sep.paths)
    arrangement: list[int] = []
    while remaining:
        if not arrangement:
            x, y = sep.u0, sep.v0
            s2 = list(remaining)
        else:
            prev = arrangement[-1]
            x = max((first_split(fam, prev, f) for f in remaining), key=r.__getitem__)
            want = tree_path_edges(fam.l_parent, sep.u0, x)
            s1 = [f for f in remaining if _contains(fam, f, want)]
            y = min((last_split(fam, prev, f) for f in s1), key=r.__getitem__)
            want = tree_path_edges(fam.r_parent, y, sep.v0)
            s2 = [f for f in s1 if _contains(fam, f, want)]
        late_l = [e for e in t_left if all(r[x] <= r[w] for w in e)]
        s3 = [f for f in s2 if any(e in fam.edge_sets[f] for e in late_l)] or s2
        early_r = [e for e in t_right if all(r[w] <= r[y] for w in e)]
        s4 = [f for f in s3 if any(e in fam.edge_sets[f] for e in early_r)] or s3
        pick = min(s4)
        arrangement.append(pick)
        remaining.remove(pick)
    out = OrderedFamily(fam, sep, prof, tuple(arrangement), left, right, mixed, t_left, t_right)
    out.fences, out.intervals = fences_and_intervals(fam, out.arrangement, out.transforming)
    return out


def fences_and_intervals(fam: PathFamily, arrangement, transforming):
    """Fences are the first positions holding each transforming edge; they cut
    the arrangement into intervals.  An empty leading interval is dropped."""
    fences = set()
    for e in transforming:
        for pos, f in enumerate(arrangement, start=1):
            if e in fam.edge_sets[f]:
                fences.add(pos)
                break
    cuts = sorted(fences | {1}) + [len(arrangement) + 1]
    intervals = tuple(tuple(range(a, b)) for a, b in zip(cuts, cuts[1:]) if a < b)
    return tuple(sorted(fences)), intervals


def check_arrangement(o: OrderedFamily) -> list[Check]:
    """The four properties the arrangement inherits from its greedy steps."""
    fam = o.fam
    g = o.arrangement
    m = len(g)
    r = fam.rank
    c1, c2, c3, c4 = Check("contiguous_holders"), Check("split_order"), Check("left_leaf_priority"), Check("right_leaf_priority")

    # (i): for each w, the positions whose path contains u0 L w are contiguous
    for w in range(fam.graph.n):
        if w != o.sep.u0 and not _is_l_descendant(fam, o.sep.u0, w):
            continue
        want = tree_path_edges(fam.l_parent, o.sep.u0, w)
        hits = [p for p in range(m) if w in fam.vertex_sets[g[p]] and _contains(fam, g[p], want)]
        c1.checked += 1
        if hits and hits[-1] - hits[0] + 1 != len(hits):
            c1.fail(f"paths holding u0 L {w} are not consecutive: positions {[h + 1 for h in hits]}")

    def has_t(f, edges):
        return any(e in fam.edge_sets[f] for e in edges)

    for j in range(1, m):  # g[j] is g_{j+1}; its predecessor is g[j-1]
        prev, cur = g[j - 1], g[j]
        ls_j, rs_j = first_split(fam, prev, cur), last_split(fam, prev, cur)
        for k in range(j + 1, m):
            other = g[k]
            ls_k, rs_k = first_split(fam, prev, other), last_split(fam, prev, other)
            c2.checked += 1
            if r[ls_j] < r[ls_k] or (ls_j == ls_k and r[rs_j] > r[rs_k]):
                c2.fail(f"positions {j + 1} < {k + 1}: split vertices out of order after {prev}")
            if ls_j != ls_k or rs_j != rs_k:
                continue
            c3.checked += 1
            c4.checked += 1
            if not has_t(cur, o.transforming_left) and has_t(other, o.transforming_left):
                c3.fail(f"positions {j + 1} < {k + 1}: later path has an L leaf edge, earlier has none")
            if has_t(other, o.transforming_right) and not has_t(cur, o.transforming_right):
                if not (has_t(cur, o.transforming_left) and not has_t(other, o.transforming_left)):
                    c4.fail(f"positions {j + 1} < {k + 1}: R leaf edge preference not justified by L")
    return [c1, c2, c3, c4]


def _is_l_descendant(fam: PathFamily, root: int, w: int) -> bool:
    x = w
    while x in fam.l_parent:
        x = fam.l_parent[x]
        if x == root:
            return True
    return False


def check_fences(o: OrderedFamily) -> Check:
    """Interval count bound and an independent recount of the fences."""
    ch = Check("fences", checked=1)
    fam = o.fam
    bound = 2 * len(o.arrangement) / o.profile.gamma + 1
    if len(o.intervals) > bound:
        ch.fail(f"{len(o.intervals)} intervals > 2|P|/gamma + 1 = {bound:.2f}")
    firsts = set()
    for e in o.transforming:
        holders = [p for p in range(1, len(o.arrangement) + 1) if e in fam.edge_sets[o.arrangement[p - 1]]]
        if holders:
            firsts.add(min(holders))
    if firsts != set(o.fences):
        ch.fail(f"fences {sorted(o.fences)} differ from first holders {sorted(firsts)}")
    covered = [p for iv in o.intervals for p in iv]
    if covered != list(range(1, len(o.arrangement) + 1)):
        ch.fail("intervals do not partition the arrangement")
    return ch


# -- pruning -----------------------------------------------------------------------


@dataclass(frozen=True)
class PruneResult:
    kept: tuple[int, ...]
    removed: tuple[int, ...]
    w_counts: dict[int, int]
    special_pair_counts: dict[int, int]
    c_w: float
    c_t: float

    def to_dict(self) -> dict:
        return {
            "kept": list(self.kept),
            "removed": list(self.removed),
            "w_counts": {str(k): v for k, v in self.w_counts.items()},
            "special_pair_counts": {str(k): v for k, v in self.special_pair_counts.items()},
            "c_w": self.c_w,
            "c_t": self.c_t,
        }


def default_thresholds(n: int) -> tuple[float, float]:
    ln = math.log2(n)
    return 26 * math.sqrt(n) * ln, n**0.25


def prune_paths(fam: PathFamily, subset=None, c_w=None, c_t=None, budget=None) -> PruneResult:
    """Drop paths lying in at least c_w sets W_jk, or in at least c_t type-I or
    type-II pairs inside the subset."""
    idx = _subset(fam, subset)
    dw, dt = default_thresholds(fam.graph.n)
    c_w = dw if c_w is None else c_w
    c_t = dt if c_t is None else c_t
    w_sets = feasibility_index(fam, budget).w_sets()
    w_counts = {i: sum(1 for w in w_sets.values() if i in w) for i in idx}
    special = {i: 0 for i in idx}
    for i, j in combinations(idx, 2):
        if fam.classify(i, j).kind != "normal":
            special[i] += 1
            special[j] += 1
    removed = tuple(i for i in idx if w_counts[i] >= c_w or special[i] >= c_t)
    kept = tuple(i for i in idx if i not in removed)
    return PruneResult(kept, removed, w_counts, special, c_w, c_t)


def check_low_degree_crossings(fam: PathFamily, sep: SeparatorFamily, prof: DegreeProfile) -> Check:
    """An edge on the L-part of one path and the R-part of another has
    d(e) <= 2 n^(1/4).  Meaningful on pruned families of graphs with few cycles."""
    ch = Check("low_degree_crossings")
    limit = 2 * fam.graph.n**0.25
    for e, d in prof.degree.items():
        ls = any(e in fam.l_parts[k] for k in sep.paths)
        rs = any(e in fam.r_parts[k] for k in sep.paths)
        if ls and rs:
            ch.checked += 1
            if d > limit:
                ch.fail(f"edge {e} on L- and R-parts has degree {d} > {limit:.2f}")
    return ch


# -- counting audit --------------------------------------------------------------


@dataclass
class CountingAudit:
    phi: list[tuple[int, int]]  # arrangement positions (1-based), j < k
    sigma_pairs: int
    sigma_edges: int
    cycle_lengths: list[int]
    per_edge: dict[Edge, int]
    lengths_distinct: bool
    lower_side: int  # 1 + 2 + ... + |phi|
    upper_side: float  # (n + s) * beta * gamma / 2
    window: tuple[float, float]

    def to_dict(self) -> dict:
        return {
            "phi_size": len(self.phi),
            "phi": [list(p) for p in self.phi],
            "sigma_pair_major": self.sigma_pairs,
            "sigma_edge_major": self.sigma_edges,
            "sigma_cycle_lengths": sum(self.cycle_lengths),
            "lengths_distinct": self.lengths_distinct,
            "lower_side": self.lower_side,
            "upper_side": self.upper_side,
            "window": list(self.window),
        }


def _single_cycle_length(n: int, edges: frozenset[Edge]) -> int | None:
    cycles = list(iter_cycles(Graph(n, tuple(edges))))
    if len(cycles) != 1 or len(cycles[0]) != len(edges):
        return None
    return len(cycles[0])


def counting_audit(o: OrderedFamily) -> CountingAudit:
    """Normal pairs in one interval whose positions differ by a value in
    [beta, sqrt(beta gamma)], and the edge sum over their differences
    computed pair by pair and edge by edge."""
    fam = o.fam
    g = o.arrangement
    lo = o.profile.beta
    hi = math.sqrt(o.profile.beta * o.profile.gamma)
    which = o.interval_of()
    phi = []
    for j, k in combinations(range(1, len(g) + 1), 2):
        if which[j] != which[k] or not lo <= k - j <= hi:
            continue
        if fam.classify(g[j - 1], g[k - 1]).kind == "normal":
            phi.append((j, k))
    sigma_pairs = 0
    lengths = []
    for j, k in phi:
        diff = fam.symmetric_difference(g[j - 1], g[k - 1])
        sigma_pairs += len(diff)
        length = _single_cycle_length(fam.graph.n, diff)
        lengths.append(-1 if length is None else length)
    per_edge = {}
    for e in fam.graph.edges:
        tot = 0
        for j, k in phi:
            tot += (e in fam.edge_sets[g[j - 1]]) != (e in fam.edge_sets[g[k - 1]])
        if tot:
            per_edge[e] = tot
    m = len(phi)
    return CountingAudit(
        phi=phi,
        sigma_pairs=sigma_pairs,
        sigma_edges=sum(per_edge.values()),
        cycle_lengths=lengths,
        per_edge=per_edge,
        lengths_distinct=len(set(lengths)) == len(lengths),
        lower_side=m * (m + 1) // 2,
        upper_side=fam.graph.m * o.profile.beta * o.profile.gamma / 2,
        window=(lo, hi),
    )


# -- consecutiveness ---------------------------------------------------------------


def _split_cost(bits: list[int]) -> int:
    """Fewest deletions leaving ones then zeros."""
    zeros_before = 0
    ones_after = sum(bits)
    best = ones_after
    for b in bits:
        if b:
            ones_after -= 1
        else:
            zeros_before += 1
        best = min(best, zeros_before + ones_after)
    return best


@dataclass(frozen=True)
class EdgeConsecutiveness:
    edge: Edge
    degree: int
    after_first: int  # deletions so no holder follows a non-holder after the first holder
    one_interval: int  # deletions so only one interval mixes, holders first
    within_2beta: bool
    within_3beta: bool


def consecutiveness_report(o: OrderedFamily) -> list[EdgeConsecutiveness]:
    """Exact minimum deletions per high-degree edge, for the two layouts."""
    fam = o.fam
    g = o.arrangement
    beta = o.profile.beta
    out = []
    for e, d in sorted(o.profile.degree.items()):
        if d < o.profile.gamma:
            continue
        bits = [int(e in fam.edge_sets[f]) for f in g]
        first = bits.index(1)
        a = _split_cost(bits[first + 1 :])
        per = [[bits[p - 1] for p in iv] for iv in o.intervals]
        uniform = [min(sum(x), len(x) - sum(x)) for x in per]
        b = sum(uniform) + min(_split_cost(x) - u for x, u in zip(per, uniform))
        out.append(EdgeConsecutiveness(e, d, a, b, a <= 2 * beta, b <= 3 * beta))
    return out
