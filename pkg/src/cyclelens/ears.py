"""Ordered ear decompositions, the trees L and R, and the (u, v)-path family.

Given a 2-connected graph and a base edge uv, the decomposition grows a
cycle through uv by repeatedly attaching the ear whose endpoints are least in
a linear vertex order; the inner vertices of each new ear are inserted into
that order right after its left endpoint.  Dropping the last (resp. first)
edge of every later ear yields spanning trees L rooted at u and R rooted at
v, and each ear P_i extends to a u-v path ``f_i = uL l_i + P_i + r_i R v``.

Pairs of paths are compared through their *blocks*: maximal stretches
between consecutive common vertices where the two paths differ.  Each block
closes one cycle of the symmetric difference.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Literal

from .cycles import is_two_connected
from .errors import InvalidInput, NotTwoConnected
from .graph import Edge, Graph, norm_edge

Path = tuple[int, ...]


def path_edges(p: Path) -> frozenset[Edge]:
    return frozenset(norm_edge(a, b) for a, b in zip(p, p[1:]))


@dataclass(frozen=True)
class EarDecomposition:
    graph: Graph
    base_edge: Edge  # (u, v) as given: u roots L, v roots R
    ears: tuple[Path, ...]  # ears[0] = P_0 from u to v; ears[i] from l_i to r_i
    order: tuple[int, ...]  # vertices listed by the linear order

    @property
    def u(self) -> int:
        return self.base_edge[0]

    @property
    def v(self) -> int:
        return self.base_edge[1]

    @property
    def s(self) -> int:
        return len(self.ears) - 1

    @cached_property
    def rank(self) -> dict[int, int]:
        return {x: i for i, x in enumerate(self.order)}

    def left(self, i: int) -> int:
        return self.ears[i][0]

    def right(self, i: int) -> int:
        return self.ears[i][-1]

    @cached_property
    def first_ear(self) -> dict[int, int]:
        """Smallest i with the vertex on P_i."""
        out: dict[int, int] = {}
        for i, ear in enumerate(self.ears):
            for x in ear:
                out.setdefault(x, i)
        return out

    def to_dict(self) -> dict:
        return {
            "base_edge": list(self.base_edge),
            "s": self.s,
            "ears": [list(e) for e in self.ears],
            "order": list(self.order),
        }


def _first_cycle_path(g: Graph, u: int, v: int) -> Path:
    # shortest u-v path avoiding the edge uv, lexicographically least
    dist = {v: 0}
    todo = deque([v])
    while todo:
        x = todo.popleft()
        for w in g.adj[x]:
            if w not in dist and not {x, w} == {u, v}:
                dist[w] = dist[x] + 1
                todo.append(w)
    if u not in dist:
        raise NotTwoConnected("no cycle through the base edge")
    p = [u]
    while p[-1] != v:
        x = p[-1]
        p.append(min(w for w in g.adj[x] if dist.get(w) == dist[x] - 1 and {x, w} != {u, v}))
    return tuple(p)


def _outside_component(g: Graph, start: int, inside: set[int], banned: set[int]) -> set[int]:
    seen = {start}
    todo = [start]
    while todo:
        x = todo.pop()
        for w in g.adj[x]:
            if w not in inside and w not in banned and w not in seen:
                seen.add(w)
                todo.append(w)
    return seen


def _least_ear(g, inside, used_edges, rank, order):
    """Minimal (l, r) over all ears of the current subgraph, then its path."""
    for l in order:
        ends = set()
        for w in g.adj[l]:
            if w in inside:
                if norm_edge(l, w) not in used_edges:
                    ends.add(w)
            else:
                comp = _outside_component(g, w, inside, set())
                for y in comp:
                    ends.update(z for z in g.adj[y] if z in inside and z != l)
        if ends:
            r = min(ends, key=rank.__getitem__)
            return l, r, _least_inner(g, l, r, inside, used_edges)
    return None


def _least_inner(g, l, r, inside, used_edges) -> Path:
    # lexicographically least inner-vertex sequence; the empty one (a single
    # edge) wins outright, and a shorter prefix beats any extension of it
    if r in g.adj[l] and norm_edge(l, r) not in used_edges:
        return (l, r)
    p = [l]
    used = {l}
    while True:
        cur = p[-1]
        if cur != l and r in g.adj[cur]:
            return tuple(p) + (r,)
        for w in g.adj[cur]:
            if w in inside or w in used:
                continue
            comp = _outside_component(g, w, inside, used)
            if any(r in g.adj[y] for y in comp):
                p.append(w)
                used.add(w)
                break
        else:
            raise AssertionError("ear path search lost its target")


def ear_decompose(g: Graph, uv) -> EarDecomposition:
    u, v = uv
    if not g.has_edge(u, v):
        raise InvalidInput(f"base edge {uv} is not in the graph")
    if not is_two_connected(g):
        raise NotTwoConnected("ear decompositions exist only for 2-connected graphs")
    p0 = _first_cycle_path(g, u, v)
    ears = [p0]
    order = list(p0)
    inside = set(p0)
    used_edges = set(path_edges(p0)) | {norm_edge(u, v)}
    while len(used_edges) < g.m:
        rank = {x: i for i, x in enumerate(order)}
        l, r, ear = _least_ear(g, inside, used_edges, rank, order)
        at = order.index(l) + 1
        order[at:at] = ear[1:-1]
        inside.update(ear)
        used_edges.update(path_edges(ear))
        ears.append(ear)
    return EarDecomposition(graph=g, base_edge=(u, v), ears=tuple(ears), order=tuple(order))


@dataclass(frozen=True)
class Block:
    """One cycle of ``f_i + f_j`` (symmetric difference): the two routes
    between common vertices ``start`` and ``end``."""

    start: int
    end: int
    seg_i: Path
    seg_j: Path

    @property
    def cycle_edges(self) -> frozenset[Edge]:
        return path_edges(self.seg_i) | path_edges(self.seg_j)

    @property
    def length(self) -> int:
        return len(self.seg_i) + len(self.seg_j) - 2


PairKind = Literal["type-I", "type-II", "normal"]


@dataclass(frozen=True)
class PairClassification:
    """Classification of the unordered pair {f_i, f_j}, stored with i < j.

    type-I:  ``splitting = (a, b, c, d)`` are the block endpoints and ``base``
             is the k < i with f_k = u f_j c + c f_i v (None if absent).
    type-II: ``base`` is the least crossing index k and ``splitting`` the four
             vertices a < b < c < d on f_k; ``leading`` is whichever of i, j
             has primary segment from a to c.
    normal:  ``splitting`` holds the two endpoints of the single block.
    """

    i: int
    j: int
    kind: PairKind
    splitting: tuple[int, ...]
    base: int | None = None
    leading: int | None = None
    ps_ij: Path | None = None
    ps_ji: Path | None = None

    def to_dict(self) -> dict:
        d = {"i": self.i, "j": self.j, "kind": self.kind, "splitting": list(self.splitting)}
        if self.base is not None:
            d["base"] = self.base
        if self.leading is not None:
            d["leading"] = self.leading
        return d


@dataclass
class PathFamily:
    """The paths f_0 .. f_s together with L, R and cached pair data."""

    decomposition: EarDecomposition
    paths: tuple[Path, ...] = field(init=False)
    l_parent: dict[int, int] = field(init=False)
    r_parent: dict[int, int] = field(init=False)

    def __post_init__(self):
        d = self.decomposition
        p0 = d.ears[0]
        lp: dict[int, int] = {}
        rp: dict[int, int] = {}
        for a, b in zip(p0, p0[1:]):
            lp[b] = a
            rp[a] = b
        for ear in d.ears[1:]:
            inner = ear[1:-1]
            for a, b in zip(ear[:-1], inner):
                lp[b] = a
            for a, b in zip(inner, ear[2:]):
                rp[a] = b
        self.l_parent = lp
        self.r_parent = rp
        paths = [p0]
        for ear in d.ears[1:]:
            paths.append(self.l_path(ear[0]) + ear[1:-1] + self.r_path(ear[-1]))
        self.paths = tuple(paths)
        self._blocks: dict = {}
        self._class: dict = {}

    # -- basic accessors ----------------------------------------------------

    @property
    def s(self) -> int:
        return self.decomposition.s

    @property
    def u(self) -> int:
        return self.decomposition.u

    @property
    def v(self) -> int:
        return self.decomposition.v

    @property
    def graph(self) -> Graph:
        return self.decomposition.graph

    @property
    def rank(self) -> dict[int, int]:
        return self.decomposition.rank

    def indices(self) -> range:
        return range(self.s + 1)

    def precedes(self, x: int, y: int) -> bool:
        return self.rank[x] < self.rank[y]

    def l_path(self, w: int) -> Path:
        """Vertices of the L-path from u to w."""
        out = [w]
        while out[-1] != self.u:
            out.append(self.l_parent[out[-1]])
        return tuple(reversed(out))

    def r_path(self, w: int) -> Path:
        """Vertices of the R-path from w to v."""
        out = [w]
        while out[-1] != self.v:
            out.append(self.r_parent[out[-1]])
        return tuple(out)

    @cached_property
    def l_tree_edges(self) -> frozenset[Edge]:
        return frozenset(norm_edge(a, b) for a, b in self.l_parent.items())

    @cached_property
    def r_tree_edges(self) -> frozenset[Edge]:
        return frozenset(norm_edge(a, b) for a, b in self.r_parent.items())

    @cached_property
    def edge_sets(self) -> tuple[frozenset[Edge], ...]:
        return tuple(path_edges(p) for p in self.paths)

    @cached_property
    def vertex_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(p) for p in self.paths)

    @cached_property
    def ear_edges(self) -> tuple[frozenset[Edge], ...]:
        return tuple(path_edges(e) for e in self.decomposition.ears)

    @cached_property
    def positions(self) -> tuple[dict[int, int], ...]:
        return tuple({x: t for t, x in enumerate(p)} for p in self.paths)

    @cached_property
    def l_parts(self) -> tuple[frozenset[Edge], ...]:
        """Edge sets of L_i = uL l_i (empty for i = 0)."""
        d = self.decomposition
        return (frozenset(),) + tuple(path_edges(self.l_path(d.left(i))) for i in range(1, d.s + 1))

    @cached_property
    def r_parts(self) -> tuple[frozenset[Edge], ...]:
        """Edge sets of R_i = r_i R v (empty for i = 0)."""
        d = self.decomposition
        return (frozenset(),) + tuple(path_edges(self.r_path(d.right(i))) for i in range(1, d.s + 1))

    def subpath(self, i: int, x: int, y: int) -> Path:
        """Vertices of f_i between x and y, in the u-to-v direction."""
        pos = self.positions[i]
        a, b = pos[x], pos[y]
        if a > b:
            a, b = b, a
        return self.paths[i][a : b + 1]

    def contains_subpath(self, i: int, p: Path) -> bool:
        return path_edges(p) <= self.edge_sets[i] and set(p) <= self.vertex_sets[i]

    # -- pairs ----------------------------------------------------------------

    def blocks(self, i: int, j: int) -> tuple[Block, ...]:
        """Cycles of f_i + f_j, left to right.  ``seg_i`` lies on f_i."""
        key = (i, j)
        if key in self._blocks:
            return self._blocks[key]
        fi, fj = self.paths[i], self.paths[j]
        pj = self.positions[j]
        common = [x for x in fi if x in pj]
        if any(pj[a] >= pj[b] for a, b in zip(common, common[1:])):
            raise AssertionError(f"f_{i} and f_{j} meet in different orders")
        out = []
        for a, b in zip(common, common[1:]):
            si = self.subpath(i, a, b)
            sj = fj[pj[a] : pj[b] + 1]
            if si != sj:
                out.append(Block(a, b, si, sj))
        res = tuple(out)
        self._blocks[key] = res
        self._blocks[(j, i)] = tuple(Block(bl.start, bl.end, bl.seg_j, bl.seg_i) for bl in res)
        return res

    def splitting_vertices(self, i: int, j: int) -> tuple[int, ...]:
        """Endpoints of the blocks of f_i + f_j, in the linear order.

        A vertex closing one block and opening the next is listed twice, so
        the result reads ``a, b`` or ``a, b, c, d`` with ``b <= c``.
        """
        if i == j:
            raise InvalidInput("splitting vertices need two distinct paths")
        out = []
        for bl in self.blocks(i, j):
            out += [bl.start, bl.end]
        return tuple(out)

    def primary_segment(self, i: int, j: int) -> Path | None:
        """The segment of f_i minus f_j that carries edges of P_i."""
        hits = [bl.seg_i for bl in self.blocks(i, j) if path_edges(bl.seg_i) & self.ear_edges[i]]
        return hits[0] if len(hits) == 1 else None

    def symmetric_difference(self, i: int, j: int) -> frozenset[Edge]:
        return self.edge_sets[i] ^ self.edge_sets[j]

    def _crossing(self, i: int, j: int, k: int):
        psi = self.primary_segment(i, k)
        psj = self.primary_segment(j, k)
        if psi is None or psj is None:
            return None
        r = self.rank
        for lead, first, second in ((i, psi, psj), (j, psj, psi)):
            a, c = first[0], first[-1]
            b, d = second[0], second[-1]
            if r[a] < r[b] < r[c] < r[d]:
                return lead, (a, b, c, d)
        return None

    def crossing_paths(self, i: int, j: int) -> list[int]:
        return [k for k in self.indices() if k not in (i, j) and self._crossing(i, j, k)]

    def classify(self, i: int, j: int) -> PairClassification:
        if i == j:
            raise InvalidInput("classification needs two distinct paths")
        if i > j:
            i, j = j, i
        key = (i, j)
        if key in self._class:
            return self._class[key]
        bl = self.blocks(i, j)
        split = self.splitting_vertices(i, j)
        ps_ij = self.primary_segment(i, j)
        ps_ji = self.primary_segment(j, i)
        if len(bl) == 2:
            c = split[2]
            target = self.subpath(j, self.u, c) + self.subpath(i, c, self.v)[1:]
            base = next((k for k in self.indices() if self.paths[k] == target), None)
            res = PairClassification(i, j, "type-I", split, base, None, ps_ij, ps_ji)
        else:
            res = None
            for k in self.indices():
                if k in (i, j):
                    continue
                hit = self._crossing(i, j, k)
                if hit:
                    lead, abcd = hit
                    res = PairClassification(i, j, "type-II", abcd, k, lead, ps_ij, ps_ji)
                    break
            if res is None:
                res = PairClassification(i, j, "normal", split, None, None, ps_ij, ps_ji)
        self._class[key] = res
        return res

    def classification_matrix(self) -> dict[tuple[int, int], PairClassification]:
        return {(i, j): self.classify(i, j) for i in self.indices() for j in self.indices() if i < j}

    def pair_counts(self) -> dict[str, int]:
        counts = {"type-I": 0, "type-II": 0, "normal": 0}
        for c in self.classification_matrix().values():
            counts[c.kind] += 1
        return counts


def build_family(d: EarDecomposition) -> PathFamily:
    return PathFamily(d)


def analyze(g: Graph, uv) -> PathFamily:
    return build_family(ear_decompose(g, uv))
