"""Simple undirected graphs with stable integer vertex ids, plus JSON/DOT I/O."""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import InvalidInput

Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    ``edges`` is kept sorted with ``u < v`` inside every pair, so two graphs
    with the same edge set compare equal.
    """

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if self.n < 0:
            raise InvalidInput("vertex count must be non-negative")
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise InvalidInput(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidInput(f"edge ({u}, {v}) outside [0, {self.n - 1}]")
            e = norm_edge(u, v)
            if e in seen:
                raise InvalidInput(f"repeated edge {e}")
            seen.add(e)
        object.__setattr__(self, "edges", tuple(sorted(seen)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> "Graph":
        pairs = []
        for e in edges:
            u, v = e
            pairs.append((int(u), int(v)))
        return cls(n, tuple(pairs))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(x)) for x in nbrs)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.edge_set

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def relabel(self, perm: list[int]) -> "Graph":
        """Return the graph with vertex ``x`` renamed to ``perm[x]``."""
        if sorted(perm) != list(range(self.n)):
            raise InvalidInput("relabeling must be a permutation of the vertex set")
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def edge_subgraph(self, edges: Iterable[Edge]) -> "Graph":
        """Same vertex set, only the given edges (which must belong to self)."""
        chosen = {norm_edge(*e) for e in edges}
        missing = chosen - self.edge_set
        if missing:
            raise InvalidInput(f"edges not in graph: {sorted(missing)[:3]}")
        return Graph(self.n, tuple(chosen))

    # -- serialization -----------------------------------------------------

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    def digest(self) -> str:
        """SHA-256 of the canonical JSON encoding."""
        return hashlib.sha256(self.to_json().encode()).hexdigest()

    @classmethod
    def from_dict(cls, data: dict) -> "Graph":
        try:
            n = data["n"]
            edges = data["edges"]
        except (KeyError, TypeError) as exc:
            raise InvalidInput("graph JSON needs keys 'n' and 'edges'") from exc
        if not isinstance(n, int) or isinstance(n, bool):
            raise InvalidInput("'n' must be an integer")
        try:
            return cls.from_edges(n, edges)
        except (TypeError, ValueError) as exc:
            if isinstance(exc, InvalidInput):
                raise
            raise InvalidInput(f"malformed edge list: {exc}") from exc

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidInput(f"invalid JSON: {exc}") from exc
        return cls.from_dict(data)

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        lines += [f"  {v};" for v in range(self.n)]
        lines += [f"  {u} -- {v};" for u, v in self.edges]
        lines.append("}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_dot(cls, text: str) -> "Graph":
        """Parse the small undirected DOT subset written by :meth:`to_dot`.

        Vertex ids must be non-negative integers; ``n`` is one more than the
        largest id mentioned.
        """
        body = re.sub(r"//[^\n]*|/\*.*?\*/", "", text, flags=re.S)
        if not re.search(r"\bgraph\b[^{]*\{", body) or "->" in body:
            raise InvalidInput("expected an undirected DOT graph")
        inner = body[body.index("{") + 1 : body.rindex("}")]
        verts: set[int] = set()
        edges = []
        for stmt in re.split(r"[;\n]", inner):
            stmt = re.sub(r"\[.*?\]", "", stmt).strip()
            if not stmt or "=" in stmt:
                continue
            parts = [p.strip().strip('"') for p in stmt.split("--")]
            try:
                ids = [int(p) for p in parts]
            except ValueError as exc:
                raise InvalidInput(f"non-integer vertex in DOT statement {stmt!r}") from exc
            verts.update(ids)
            edges.extend(zip(ids, ids[1:]))
        n = max(verts) + 1 if verts else 0
        return cls.from_edges(n, edges)


def load_graph(path: str) -> Graph:
    with open(path) as fh:
        text = fh.read()
    if path.endswith(".dot") or text.lstrip().startswith(("graph", "strict")):
        return Graph.from_dot(text)
    return Graph.from_json(text)
