"""Seeded random 2-connected graphs, built by attaching random ears to a cycle."""

from __future__ import annotations

import random

from .errors import InvalidInput
from .graph import Graph, norm_edge


def random_two_connected(n: int, extra: int, seed: int = 0, relabel: bool = True) -> Graph:
    """A 2-connected graph with n vertices and ``n + extra`` edges.

    A random cycle is grown by ``extra`` ears; the leftover vertices are spread
    over the ears at random.  An ear with no inner vertex is a chord, and a
    chord that would duplicate an edge is re-drawn.
    """
    if n < 3:
        raise InvalidInput("need n >= 3")
    if extra < 0:
        raise InvalidInput("extra must be non-negative")
    if extra > n * (n - 1) // 2 - n:
        raise InvalidInput(f"no simple graph on {n} vertices has {n + extra} edges")
    rng = random.Random(seed)
    for _ in range(1000):
        g = _attempt(n, extra, rng)
        if g is not None:
            break
    else:
        raise InvalidInput(f"could not place {extra} ears on {n} vertices")
    if relabel:
        perm = list(range(n))
        rng.shuffle(perm)
        g = g.relabel(perm)
    return g


def _attempt(n, extra, rng):
    if extra == 0:
        c = n
    else:
        c = rng.randint(3, n)
    inner = [0] * extra
    for _ in range(n - c):
        inner[rng.randrange(extra)] += 1
    edges = {norm_edge(i, (i + 1) % c) for i in range(c)}
    nxt = c
    for k in inner:
        for _ in range(50):
            a, b = rng.sample(range(nxt), 2)
            if k > 0 or norm_edge(a, b) not in edges:
                break
        else:
            return None
        chain = [a] + list(range(nxt, nxt + k)) + [b]
        nxt += k
        edges.update(norm_edge(x, y) for x, y in zip(chain, chain[1:]))
    return Graph(n, tuple(edges))
