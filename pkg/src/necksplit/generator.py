"""Seeded instance generators.

All randomness comes from :class:`random.Random` (Mersenne Twister) seeded
with the given integer, so a seed always reproduces the same instance.
"""

from __future__ import annotations

import random
import string
from collections import Counter

from .errors import DomainViolation
from .necklace import Necklace, sep_by_definition
from .walkgraph import Multigraph, check_semi_eulerian, odd_degree_vertices


def color_names(n: int) -> list[str]:
    if n <= 26:
        return list(string.ascii_lowercase[:n])
    width = len(str(n - 1))
    return [f"c{i:0{width}d}" for i in range(n)]


def random_necklace(n: int, max_pts: int, seed: int) -> Necklace:
    """``n`` colors with odd sizes drawn from ``1, 3, ..., max_pts`` on shuffled coordinates."""
    if n < 1 or max_pts < 1 or max_pts % 2 == 0:
        raise ValueError("need n >= 1 and an odd max_pts >= 1")
    rng = random.Random(seed)
    sizes = [rng.randrange(1, max_pts + 1, 2) for _ in range(n)]
    coords = list(range(1, sum(sizes) + 1))
    rng.shuffle(coords)
    colors, at = {}, 0
    for name, k in zip(color_names(n), sizes):
        colors[name] = coords[at : at + k]
        at += k
    return Necklace(colors)


def interval_chain(n: int, size: int = 3) -> Necklace:
    """``n`` consecutive interval colors of ``size`` points each; its separability is ``n - 1``."""
    if n < 1 or size < 1 or size % 2 == 0:
        raise ValueError("need n >= 1 and an odd size")
    return Necklace({name: range(i * size, (i + 1) * size) for i, name in enumerate(color_names(n))})


def random_separable_necklace(n: int, ell: int, seed: int, budget: int = 10_000, max_pts: int = 3) -> Necklace | None:
    """Rejection-sample :func:`random_necklace` until ``sep <= n - 1 + ell``; None when the budget runs out."""
    rng = random.Random(seed)
    for _ in range(budget):
        nk = random_necklace(n, max_pts, rng.getrandbits(32))
        if sep_by_definition(nk) <= n - 1 + ell:
            return nk
    return None


def eulerian_trail(g: Multigraph, seed: int = 0) -> list:
    """Hierholzer's algorithm on a connected multigraph with at most two odd vertices."""
    if g.loops or not g.vertices or not check_semi_eulerian(g):
        raise DomainViolation("an Eulerian trail needs a connected, loopless, semi-Eulerian multigraph")
    rng = random.Random(seed)
    remaining = {v: Counter(g.neighbors(v)) for v in g.vertices}
    odd = odd_degree_vertices(g)
    stack = [odd[0] if odd else g.vertices[0]]
    trail = []
    while stack:
        v = stack[-1]
        options = sorted((u for u, m in remaining[v].items() if m), key=g.vertices.index)
        if options:
            u = rng.choice(options)
            remaining[v][u] -= 1
            remaining[u][v] -= 1
            stack.append(u)
        else:
            trail.append(stack.pop())
    return trail[::-1]


def necklace_from_multigraph(g: Multigraph, seed: int = 0) -> Necklace:
    """A necklace whose walk graph is ``g``.

    One point per trail step at coordinates ``0, 2, 4, ...``. A color that ends
    up with an even count gets one extra point at the odd coordinate right
    after its first point, which only widens that component.
    """
    trail = eulerian_trail(g, seed)
    tokens = {v: v if isinstance(v, str) else str(v) for v in g.vertices}
    if len(set(tokens.values())) != len(tokens):
        raise DomainViolation("vertex ids collide once converted to color tokens")
    colors: dict[str, list[int]] = {tokens[v]: [] for v in g.vertices}
    for i, v in enumerate(trail):
        colors[tokens[v]].append(2 * i)
    for pts in colors.values():
        if len(pts) % 2 == 0:
            pts.append(pts[0] + 1)
    return Necklace(colors)


def random_trail_graph(n: int, steps: int, seed: int, plant: str | None = None) -> Multigraph:
    """Walk graph of a random vertex sequence over ``range(n)`` visiting every vertex.

    ``plant`` inserts two fresh, adjacent vertices of degree <= 2: ``"inner"``
    between two distinct vertices, ``"loop"`` between two visits of the same
    vertex, ``"end"`` at the end of the walk.
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    rng = random.Random(seed)
    walk = list(range(n))
    rng.shuffle(walk)
    while len(walk) < max(steps, n) and n > 1:
        walk.append(rng.choice([v for v in range(n) if v != walk[-1]]))
    c, d = n, n + 1
    if plant == "end":
        walk += [c, d]
    elif plant == "inner":
        spots = [i for i in range(len(walk) - 1)]
        if not spots:
            walk += [c, d]
        else:
            i = rng.choice(spots)
            walk[i + 1 : i + 1] = [c, d]
    elif plant == "loop":
        v = rng.choice(walk)
        i = walk.index(v)
        walk[i + 1 : i + 1] = [c, d, v]
    elif plant is not None:
        raise ValueError(f"unknown plant {plant!r}")
    vertices = sorted(set(walk))
    return Multigraph(vertices, Counter(zip(walk, walk[1:])))


def random_multigraph(n: int, extra_edges: int, max_mult: int, seed: int) -> Multigraph:
    """Connected multigraph: a random spanning tree plus random extra edges, multiplicities in ``1..max_mult``."""
    rng = random.Random(seed)
    edges: Counter = Counter()
    for v in range(1, n):
        edges[(rng.randrange(v), v)] += rng.randint(1, max_mult)
    for _ in range(extra_edges if n > 1 else 0):
        u, v = sorted(rng.sample(range(n), 2))
        edges[(u, v)] = min(max_mult, edges[(u, v)] + rng.randint(1, max_mult))
    return Multigraph(range(n), edges)
