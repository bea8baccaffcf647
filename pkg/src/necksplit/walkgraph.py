"""Multigraphs, walk graphs of necklaces, cuts and the Edwards-Erdős bound."""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import Hashable, Iterable, Mapping

from .errors import BoundInapplicable, MalformedCut, MalformedInput
from .necklace import Necklace, color_string

Vertex = Hashable


class Multigraph:
    """Undirected multigraph with integer edge multiplicities.

    Edges are keyed by an endpoint pair ordered by vertex position. Self-loops
    are stored separately; they add 2 to a vertex degree and never cross a cut.
    Equality ignores vertex order.
    """

    def __init__(
        self,
        vertices: Iterable[Vertex],
        edges: Mapping[tuple[Vertex, Vertex], int] | Iterable[tuple[Vertex, Vertex]] = (),
        loops: Mapping[Vertex, int] | None = None,
    ):
        self.vertices: tuple[Vertex, ...] = tuple(dict.fromkeys(vertices))
        self._pos = {v: i for i, v in enumerate(self.vertices)}
        pairs = edges.items() if isinstance(edges, Mapping) else ((e, 1) for e in edges)
        merged: Counter = Counter()
        self.loops: dict[Vertex, int] = {}
        for (u, v), m in pairs:
            if u not in self._pos or v not in self._pos:
                raise MalformedInput(f"edge {u!r}-{v!r} has an endpoint outside the vertex set")
            if not isinstance(m, int) or m < 1:
                raise MalformedInput(f"multiplicity of {u!r}-{v!r} must be a positive integer")
            if u == v:
                self.loops[u] = self.loops.get(u, 0) + m
            else:
                merged[self._key(u, v)] += m
        for v, m in (loops or {}).items():
            if v not in self._pos or m < 0:
                raise MalformedInput(f"bad self-loop entry {v!r}: {m!r}")
            if m:
                self.loops[v] = self.loops.get(v, 0) + m
        self.edges: dict[tuple[Vertex, Vertex], int] = dict(
            sorted(merged.items(), key=lambda kv: (self._pos[kv[0][0]], self._pos[kv[0][1]]))
        )
        self._adj: dict[Vertex, dict[Vertex, int]] = {v: {} for v in self.vertices}
        for (u, v), m in self.edges.items():
            self._adj[u][v] = m
            self._adj[v][u] = m

    def _key(self, u: Vertex, v: Vertex) -> tuple[Vertex, Vertex]:
        return (u, v) if self._pos[u] <= self._pos[v] else (v, u)

    def multiplicity(self, u: Vertex, v: Vertex) -> int:
        if u == v:
            return self.loops.get(u, 0)
        return self._adj[u].get(v, 0)

    def neighbors(self, v: Vertex) -> dict[Vertex, int]:
        return dict(self._adj[v])

    def degree(self, v: Vertex) -> int:
        return sum(self._adj[v].values()) + 2 * self.loops.get(v, 0)

    @property
    def edge_count(self) -> int:
        return sum(self.edges.values()) + sum(self.loops.values())

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            u = stack.pop()
            for w in self._adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)

    def without_loops(self) -> Multigraph:
        return Multigraph(self.vertices, self.edges)

    def relabel(self, mapping: Mapping[Vertex, Vertex]) -> Multigraph:
        return Multigraph(
            (mapping[v] for v in self.vertices),
            {(mapping[u], mapping[v]): m for (u, v), m in self.edges.items()},
            {mapping[v]: m for v, m in self.loops.items()},
        )

    def _canonical(self):
        return (
            frozenset(self.vertices),
            frozenset((frozenset(e), m) for e, m in self.edges.items()),
            frozenset(self.loops.items()),
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self._canonical() == other._canonical()

    def __hash__(self) -> int:
        return hash(self._canonical())

    def __repr__(self) -> str:
        es = ", ".join(f"{u}{v}:{m}" for (u, v), m in self.edges.items())
        ls = "".join(f", loop {v}:{m}" for v, m in self.loops.items())
        return f"Multigraph(V={list(self.vertices)}, E={{{es}}}{ls})"


def build_walk_graph(nk: Necklace) -> Multigraph:
    """Vertices are colors; multiplicity counts adjacencies in the color string."""
    cs = color_string(nk)
    return Multigraph(nk.color_ids, Counter(zip(cs, cs[1:])))


def odd_degree_vertices(g: Multigraph) -> list[Vertex]:
    return [v for v in g.vertices if g.degree(v) % 2]


def check_semi_eulerian(g: Multigraph) -> bool:
    return g.is_connected() and len(odd_degree_vertices(g)) <= 2


def cut_size(g: Multigraph, side: Iterable[Vertex]) -> int:
    side = set(side)
    unknown = [v for v in side if v not in g._pos]
    if unknown:
        raise MalformedCut(f"cut mentions vertices not in the graph: {unknown!r}")
    return sum(m for (u, v), m in g.edges.items() if (u in side) != (v in side))


def edwards_erdos_bound(g: Multigraph) -> Fraction:
    """``|E|/2 + (|V|-1)/4``, a lower bound on the max cut of a connected loopless multigraph."""
    if not g.is_connected():
        raise BoundInapplicable("the Edwards-Erdős bound needs a connected graph")
    if g.loops:
        raise BoundInapplicable("self-loops never cross a cut; drop them before bounding")
    if not g.vertices:
        return Fraction(0)
    return Fraction(g.edge_count, 2) + Fraction(len(g.vertices) - 1, 4)


def to_dot(g: Multigraph, name: str = "walk") -> str:
    """DOT text with one edge line per unit of multiplicity, vertices sorted by name."""
    def q(v) -> str:
        return '"' + str(v).replace("\\", "\\\\").replace('"', '\\"') + '"'

    lines = [f"graph {name} {{"]
    order = sorted(g.vertices, key=str)
    lines += [f"  {q(v)};" for v in order]
    rank = {v: i for i, v in enumerate(order)}
    edge_lines = []
    for (u, v), m in g.edges.items():
        a, b = sorted((u, v), key=rank.__getitem__)
        edge_lines += [(rank[a], rank[b], f"  {q(a)} -- {q(b)};")] * m
    for v, m in g.loops.items():
        edge_lines += [(rank[v], rank[v], f"  {q(v)} -- {q(v)};")] * m
    lines += [line for *_, line in sorted(edge_lines)]
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_document(g: Multigraph) -> dict:
    doc = {
        "vertices": [str(v) for v in g.vertices],
        "edges": [{"u": str(u), "v": str(v), "multiplicity": m} for (u, v), m in g.edges.items()],
    }
    if g.loops:
        doc["loops"] = {str(v): m for v, m in g.loops.items()}
    return doc
