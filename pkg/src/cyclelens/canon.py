"""Exact canonical labelling by individualisation and refinement.

The canonical form is the lexicographically least sorted edge list over all
leaves of the search tree.  Equitable refinement keys on cell indices only,
so it commutes with relabelling.  Branches that individualise a twin of an
already tried vertex are skipped, since swapping twins is an automorphism
that fixes the current partition.
"""

from __future__ import annotations

from collections import Counter

from .graph import Graph, norm_edge

Form = tuple[int, tuple[tuple[int, int], ...]]


def refine(cells: list[list[int]], adj) -> list[list[int]]:
    while True:
        cell_of = {}
        for i, c in enumerate(cells):
            for v in c:
                cell_of[v] = i
        out = []
        split = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            sig = {v: tuple(sorted(Counter(cell_of[w] for w in adj[v]).items())) for v in c}
            keys = sorted(set(sig.values()))
            if len(keys) > 1:
                split = True
            for k in keys:
                out.append([v for v in c if sig[v] == k])
        cells = out
        if not split:
            return cells


def _twins(adj, a, b) -> bool:
    return (set(adj[a]) - {b}) == (set(adj[b]) - {a})


def canonical_form(g: Graph) -> Form:
    """A complete isomorphism invariant: equal iff the graphs are isomorphic."""
    adj = g.adj
    if g.n == 0:
        return (0, ())
    best = None

    def leaf(cells):
        pos = {c[0]: i for i, c in enumerate(cells)}
        return tuple(sorted(norm_edge(pos[a], pos[b]) for a, b in g.edges))

    def rec(cells):
        nonlocal best
        cells = refine(cells, adj)
        at = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if at is None:
            form = leaf(cells)
            if best is None or form < best:
                best = form
            return
        target = cells[at]
        tried: list[int] = []
        for v in target:
            if any(_twins(adj, v, w) for w in tried):
                continue
            tried.append(v)
            rest = [w for w in target if w != v]
            rec(cells[:at] + [[v], rest] + cells[at + 1 :])

    rec([list(range(g.n))])
    return (g.n, best)


def isomorphic(a: Graph, b: Graph) -> bool:
    return a.n == b.n and a.m == b.m and canonical_form(a) == canonical_form(b)
