"""Exact simple-cycle enumeration and cycle-length spectra.

Cycles are enumerated with Johnson's blocking scheme run on the symmetric
digraph of the input.  Every undirected cycle of length >= 3 shows up as two
directed circuits rooted at its smallest vertex; only the orientation whose
second vertex is smaller than its last vertex is reported.
"""

from __future__ import annotations

import os
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Iterator

from .errors import CapExceeded
from .graph import Edge, Graph, norm_edge

DEFAULT_CAP = 10**7

Cycle = tuple[int, ...]


def default_cap() -> int:
    env = os.environ.get("CYCLELENS_BUDGET")
    return int(env) if env else DEFAULT_CAP


@dataclass(frozen=True)
class CycleSpectrum:
    lengths: tuple[int, ...]  # sorted, with multiplicity
    cycle_count: int
    repeated: tuple[int, ...]
    authoritative: bool = True

    @classmethod
    def from_lengths(cls, lengths, authoritative=True) -> "CycleSpectrum":
        counts = Counter(lengths)
        return cls(
            lengths=tuple(sorted(lengths)),
            cycle_count=len(lengths),
            repeated=tuple(sorted(k for k, c in counts.items() if c > 1)),
            authoritative=authoritative,
        )

    @property
    def multiplicities(self) -> dict[int, int]:
        return dict(sorted(Counter(self.lengths).items()))

    @property
    def distinct(self) -> bool:
        return not self.repeated

    def to_dict(self) -> dict:
        return {
            "lengths": list(self.lengths),
            "cycle_count": self.cycle_count,
            "repeated": list(self.repeated),
            "authoritative": self.authoritative,
        }


def _circuits_through(root: int, adj) -> Iterator[list[int]]:
    # Johnson's circuit search restricted to vertices >= root (iterative form).
    nbrs = {}

    def succ(x):
        if x not in nbrs:
            nbrs[x] = [w for w in adj[x] if w >= root]
        return nbrs[x]

    path = [root]
    blocked = {root}
    bmap: dict[int, set[int]] = defaultdict(set)
    closed = [False]
    stack = [iter(succ(root))]

    def unblock(v):
        todo = [v]
        while todo:
            x = todo.pop()
            if x in blocked:
                blocked.discard(x)
                todo.extend(bmap[x])
                bmap[x].clear()

    while stack:
        for w in stack[-1]:
            if w == root:
                yield path
                closed[-1] = True
            elif w not in blocked:
                path.append(w)
                closed.append(False)
                stack.append(iter(succ(w)))
                blocked.add(w)
                break
        else:
            stack.pop()
            x = path.pop()
            if closed.pop():
                if closed:
                    closed[-1] = True
                unblock(x)
            else:
                for w in succ(x):
                    bmap[w].add(x)


def iter_cycles(g: Graph) -> Iterator[Cycle]:
    """Yield every simple cycle of ``g`` once, as a vertex tuple.

    Order is deterministic: roots ascend, and each cycle starts at its
    smallest vertex with ``c[1] < c[-1]``.
    """
    adj = g.adj
    for root in range(g.n):
        if sum(1 for w in adj[root] if w > root) < 2:
            continue
        for p in _circuits_through(root, adj):
            if len(p) >= 3 and p[1] < p[-1]:
                yield tuple(p)


def cycle_edges(cycle: Cycle) -> frozenset[Edge]:
    k = len(cycle)
    return frozenset(norm_edge(cycle[i], cycle[(i + 1) % k]) for i in range(k))


def enumerate_cycles(g: Graph, cap: int | None = None) -> CycleSpectrum:
    """Exact cycle spectrum of ``g``.

    Raises :class:`CapExceeded` once more than ``cap`` cycles have been seen;
    the exception's ``partial`` attribute carries a non-authoritative spectrum.
    """
    cap = default_cap() if cap is None else cap
    lengths = []
    for c in iter_cycles(g):
        if len(lengths) >= cap:
            raise CapExceeded(
                f"more than {cap} cycles",
                partial=CycleSpectrum.from_lengths(lengths, authoritative=False),
            )
        lengths.append(len(c))
    return CycleSpectrum.from_lengths(lengths)


@dataclass(frozen=True)
class RepeatCertificate:
    """Outcome of :func:`has_repeated_length`.

    With a repeat, ``witnesses`` holds two distinct cycles of equal length.
    Without one, ``by_length`` maps every length to its unique cycle.
    """

    repeated: bool
    spectrum: CycleSpectrum
    witnesses: tuple[Cycle, Cycle] | None = None
    by_length: dict[int, Cycle] = field(default_factory=dict)


def has_repeated_length(g: Graph, cap: int | None = None) -> RepeatCertificate:
    cap = default_cap() if cap is None else cap
    first: dict[int, Cycle] = {}
    lengths = []
    witnesses = None
    for c in iter_cycles(g):
        if len(lengths) >= cap:
            raise CapExceeded(
                f"more than {cap} cycles",
                partial=CycleSpectrum.from_lengths(lengths, authoritative=False),
            )
        lengths.append(len(c))
        if len(c) in first:
            if witnesses is None:
                witnesses = (first[len(c)], c)
        else:
            first[len(c)] = c
    sp = CycleSpectrum.from_lengths(lengths)
    if witnesses is not None:
        return RepeatCertificate(True, sp, witnesses)
    return RepeatCertificate(False, sp, None, dict(sorted(first.items())))


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    todo = [0]
    while todo:
        x = todo.pop()
        for w in g.adj[x]:
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return len(seen) == g.n


def articulation_points(g: Graph) -> list[int]:
    """Cut vertices via iterative Hopcroft-Tarjan low-point search."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    cut = set()
    t = 0
    for start in range(n):
        if disc[start] != -1:
            continue
        disc[start] = low[start] = t
        t += 1
        root_children = 0
        stack = [(start, -1, iter(g.adj[start]))]
        while stack:
            x, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = t
                    t += 1
                    if x == start:
                        root_children += 1
                    stack.append((w, x, iter(g.adj[w])))
                    advanced = True
                    break
                if w != parent:
                    low[x] = min(low[x], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[x])
                if parent != start and low[x] >= disc[parent]:
                    cut.add(parent)
        if root_children > 1:
            cut.add(start)
    return sorted(cut)


def is_two_connected(g: Graph) -> bool:
    """True iff ``g`` has at least 3 vertices, is connected and has no cut vertex."""
    if g.n < 3:
        return False
    return is_connected(g) and not articulation_points(g)
