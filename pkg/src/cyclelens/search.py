"""Exhaustive search over graphs without repeated cycle lengths.

States are connected graphs whose cycle lengths are pairwise distinct.  A
state grows by a pendant vertex (no new cycles) or by an edge ab, whose new
cycles are exactly the a-b paths closed by ab.  Having distinct cycle lengths
is inherited by subgraphs, and every connected graph can be reached from a
single vertex this way, so the closure of K_1 under both moves contains every
connected repeat-free graph.  Isomorphic states are merged by canonical form.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field

from .canon import canonical_form
from .cycles import is_two_connected
from .errors import InvalidInput
from .graph import Graph, norm_edge

DEFAULT_SEARCH_BUDGET = 5_000_000


def search_budget(budget: int | None) -> int:
    if budget is not None:
        return budget
    env = os.environ.get("CYCLELENS_BUDGET")
    return int(env) if env else DEFAULT_SEARCH_BUDGET


def shi_formula(n: int) -> int:
    """``max(0, floor((sqrt(8n - 15) - 3) / 2))``, computed in integers."""
    if not isinstance(n, int) or n < 2:
        raise InvalidInput("formula needs n >= 2")
    # floor((sqrt(X) - 3) / 2) == (isqrt(X) - 3) // 2 for every X >= 1
    return max(0, (math.isqrt(8 * n - 15) - 3) // 2)


@dataclass
class SearchResult:
    n: int
    best_edge_count: int | None
    witness: Graph | None
    nodes_explored: int
    proven_optimal: bool
    require_2connected: bool = False
    spectrum: tuple[int, ...] = ()

    @property
    def f(self) -> int | None:
        return None if self.best_edge_count is None else self.best_edge_count - self.n

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "f": self.f,
            "best_edge_count": self.best_edge_count,
            "two_connected": self.require_2connected,
            "proven_optimal": self.proven_optimal,
            "nodes_explored": self.nodes_explored,
            "spectrum": list(self.spectrum),
            "witness": self.witness.to_dict() if self.witness else None,
        }


def _paths_between(adj, a, b):
    """Lengths (in edges) of all simple a-b paths."""
    out = []
    stack = [(a, iter(adj[a]))]
    on = {a}
    while stack:
        x, it = stack[-1]
        for w in it:
            if w == b:
                out.append(len(stack))
            elif w not in on:
                on.add(w)
                stack.append((w, iter(adj[w])))
                break
        else:
            stack.pop()
            on.discard(x)
    return out


@dataclass
class _State:
    n: int
    edges: frozenset
    lengths: frozenset

    def graph(self) -> Graph:
        return Graph(self.n, tuple(self.edges))


@dataclass
class _Explorer:
    target_n: int
    budget: int
    seen: set = field(default_factory=set)
    explored: int = 0
    exhausted: bool = True

    def children(self, st: _State):
        g = st.graph()
        adj = g.adj
        if st.n < self.target_n:
            for v in range(st.n):
                yield _State(st.n + 1, st.edges | {(v, st.n)}, st.lengths)
        for a in range(st.n):
            for b in range(a + 1, st.n):
                if (a, b) in st.edges:
                    continue
                new = [k + 1 for k in _paths_between(adj, a, b)]
                if len(set(new)) != len(new) or st.lengths.intersection(new):
                    continue
                yield _State(st.n, st.edges | {norm_edge(a, b)}, st.lengths.union(new))

    def run(self, visit):
        """Depth-first walk over unseen states; ``visit`` sees full-order ones."""
        stack = [_State(1, frozenset(), frozenset())]
        self.seen.add(canonical_form(stack[0].graph()))
        while stack:
            if self.explored >= self.budget:
                self.exhausted = False
                return
            st = stack.pop()
            self.explored += 1
            if st.n == self.target_n:
                visit(st)
            for ch in self.children(st):
                key = canonical_form(ch.graph())
                if key not in self.seen:
                    self.seen.add(key)
                    stack.append(ch)


def exact_f(n: int, require_2connected: bool = False, budget: int | None = None) -> SearchResult:
    """Largest edge count of an n-vertex graph with no two cycles of equal length.

    A largest such graph can always be taken connected (a bridge between
    components adds no cycle), so only connected states are explored.  With
    ``require_2connected`` only 2-connected full-order states count.  If the
    state budget runs out the best graph so far is returned with
    ``proven_optimal=False``.
    """
    if not isinstance(n, int) or n < 3:
        raise InvalidInput("search needs n >= 3")
    ex = _Explorer(n, search_budget(budget))
    best: list = [None]

    def visit(st: _State):
        if best[0] is not None and len(st.edges) <= len(best[0].edges):
            return
        if require_2connected and not is_two_connected(st.graph()):
            return
        best[0] = st

    ex.run(visit)
    st = best[0]
    if st is None:
        return SearchResult(n, None, None, ex.explored, ex.exhausted, require_2connected)
    return SearchResult(
        n=n,
        best_edge_count=len(st.edges),
        witness=st.graph(),
        nodes_explored=ex.explored,
        proven_optimal=ex.exhausted,
        require_2connected=require_2connected,
        spectrum=tuple(sorted(st.lengths)),
    )


@dataclass
class PancyclicResult:
    n: int
    graphs: list[Graph]
    nodes_explored: int
    complete: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "count": len(self.graphs),
            "complete": self.complete,
            "nodes_explored": self.nodes_explored,
            "graphs": [g.to_dict() for g in self.graphs],
        }


def uniquely_pancyclic_search(n: int, budget: int | None = None) -> PancyclicResult:
    """All n-vertex graphs, up to isomorphism, with exactly one cycle of each
    length 3..n.  Such a graph is Hamiltonian, hence connected."""
    if not isinstance(n, int) or n < 3:
        raise InvalidInput("search needs n >= 3")
    want = frozenset(range(3, n + 1))
    ex = _Explorer(n, search_budget(budget))
    found = []

    def visit(st: _State):
        if st.lengths == want:
            found.append(st.graph())

    ex.run(visit)
    found.sort(key=lambda g: canonical_form(g))
    return PancyclicResult(n, [Graph(g.n, canonical_form(g)[1]) for g in found], ex.explored, ex.exhausted)
