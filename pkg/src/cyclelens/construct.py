"""Hamilton cycle plus chords from one vertex at Sidon positions.

For positions ``1 = a_1 < ... < a_k = n - 1`` with pairwise distinct
differences, the graph on ``v_0 .. v_{n-1}`` made of the cycle
``v_0 v_1 ... v_{n-1} v_0`` and chords ``v_0 v_{a_i}`` (1 < i < k) has exactly
one cycle per pair ``i < j``, of length ``a_j - a_i + 2``.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .errors import InvalidInput, TooSmall
from .field import is_prime_power
from .graph import Graph
from .sidon import is_sidon, singer_difference_set


@dataclass(frozen=True)
class ChordedCycleGraph:
    n: int
    chord_positions: tuple[int, ...]

    def __post_init__(self):
        a = self.chord_positions
        if self.n < 3:
            raise InvalidInput("need at least 3 vertices")
        if list(a) != sorted(set(a)) or len(a) < 2:
            raise InvalidInput("chord positions must be strictly increasing, at least two")
        if a[0] != 1 or a[-1] != self.n - 1:
            raise InvalidInput("chord positions must start at 1 and end at n-1")

    @property
    def k(self) -> int:
        return len(self.chord_positions)

    @cached_property
    def graph(self) -> Graph:
        edges = [(i, (i + 1) % self.n) for i in range(self.n)]
        edges += [(0, a) for a in self.chord_positions[1:-1]]
        return Graph.from_edges(self.n, edges)

    @property
    def excess(self) -> int:
        """``e(G) - n``, which equals ``k - 2``."""
        return self.graph.m - self.n

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "chords": list(self.chord_positions),
            "edges": [list(e) for e in self.graph.edges],
            "edge_count": self.graph.m,
            "spectrum": list(cycle_lengths_closed_form(self)),
        }


def cycle_lengths_closed_form(g: ChordedCycleGraph) -> tuple[int, ...]:
    """Sorted multiset ``{a_j - a_i + 2 : i < j}``."""
    return tuple(sorted(b - a + 2 for a, b in combinations(g.chord_positions, 2)))


def length_certificate(g: ChordedCycleGraph) -> list[dict]:
    """One record per cycle: its length and the two v_0 edges it uses."""
    rows = [
        {"length": b - a + 2, "chords": [a, b], "cycle": [0, *range(a, b + 1)]}
        for a, b in combinations(g.chord_positions, 2)
    ]
    return sorted(rows, key=lambda r: r["length"])


def bcfy_construct(q: int) -> ChordedCycleGraph:
    """The extremal chorded cycle on ``q^2 + q + 2`` vertices from a Singer set."""
    d = singer_difference_set(q)
    v = d.v
    pairs = [(x, y) for x in d.elements for y in d.elements if (x - y) % v == v - 1]
    x, y = min(pairs)
    shifted = sorted((e - y) % v for e in d.elements)
    assert shifted[0] == 0 and shifted[-1] == v - 1
    return ChordedCycleGraph(n=v + 1, chord_positions=tuple(e + 1 for e in shifted))


def _largest_fitting_q(n: int) -> int:
    best = None
    q = 2
    while q * q + q + 2 <= n:
        if is_prime_power(q):
            best = q
        q += 1
    if best is None:
        raise TooSmall(f"n={n} is below the smallest construction (8 vertices)")
    return best


def _repair(positions: list[int]) -> list[int]:
    # drop interior positions until all differences are distinct; the element
    # in the most colliding pairs goes first, larger position on ties
    pos = list(positions)
    while not is_sidon(pos):
        by_diff: dict[int, list[tuple[int, int]]] = {}
        for a, b in combinations(pos, 2):
            by_diff.setdefault(b - a, []).append((a, b))
        blame: Counter = Counter()
        for pairs in by_diff.values():
            if len(pairs) > 1:
                for a, b in pairs:
                    blame[a] += 1
                    blame[b] += 1
        interior = [p for p in pos[1:-1] if blame[p]]
        if not interior:
            raise AssertionError("collision involves only the fixed endpoints")
        victim = max(interior, key=lambda p: (blame[p], p))
        pos.remove(victim)
    return pos


def bcfy_for_order(n: int) -> ChordedCycleGraph:
    """Chorded cycle on exactly n vertices.

    Uses the largest prime power q with ``q^2 + q + 2 <= n``; the last arc is
    stretched so the final chord position becomes ``n - 1``.  If that
    introduces a repeated difference, interior chords are removed until the
    positions are Sidon again.
    """
    if n < 8:
        raise TooSmall("need n >= 8")
    base = bcfy_construct(_largest_fitting_q(n))
    if base.n == n:
        return base
    pos = list(base.chord_positions[:-1]) + [n - 1]
    return ChordedCycleGraph(n=n, chord_positions=tuple(_repair(pos)))


def refined_upper_bound(n: int) -> float:
    """``n + sqrt(n) + 20 sqrt(n / log2 n)``, the explicit edge bound for
    2-connected graphs without repeated cycle lengths."""
    if n < 2:
        raise InvalidInput("bound needs n >= 2")
    return n + math.sqrt(n) + 20 * math.sqrt(n / math.log2(n))


def within_refined_bound(g: Graph) -> bool:
    return g.n < 2 or g.m <= refined_upper_bound(g.n)
