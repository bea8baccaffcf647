"""Exact maximum cut on small multigraphs.

:func:`max_cut_exact` is the production solver. Vertices with at most two
distinct neighbors are eliminated exactly first (weighted series reduction,
which may create negative weights), then the remaining core is solved by
depth-first branch and bound. The size limit applies to that core.

:func:`max_cut_bruteforce` enumerates every cut with numpy and shares no code
with the solver; tests use it as the reference.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
import numpy as np

from .errors import InstanceTooLarge, InternalInconsistency
from .walkgraph import Multigraph, cut_size

LIMIT_ENV = "NECKSPLIT_MAXCUT_LIMIT"
DEFAULT_LIMIT = 28
BRUTEFORCE_LIMIT = 24


def size_limit(limit: int | None = None) -> int:
    if limit is not None:
        return limit
    raw = os.environ.get(LIMIT_ENV)
    return int(raw) if raw else DEFAULT_LIMIT


@dataclass(frozen=True)
class Cut:
    side: frozenset
    size: int


def _weights(g: Multigraph) -> list[dict[int, int]]:
    idx = {v: i for i, v in enumerate(g.vertices)}
    w: list[dict[int, int]] = [{} for _ in g.vertices]
    for (u, v), m in g.edges.items():
        w[idx[u]][idx[v]] = m
        w[idx[v]][idx[u]] = m
    return w


def _eliminate(w: list[dict[int, int]]):
    """Remove every vertex with <= 2 neighbors, in place.

    Returns the constant collected and the elimination log needed to place the
    removed vertices once the rest is fixed.
    """
    alive = set(range(len(w)))
    log: list[tuple[int, tuple[tuple[int, int], ...]]] = []
    const = 0
    queue = [v for v in range(len(w)) if len(w[v]) <= 2]
    while queue:
        v = queue.pop()
        if v not in alive or len(w[v]) > 2:
            continue
        nbrs = tuple(w[v].items())
        log.append((v, nbrs))
        alive.discard(v)
        for x, _ in nbrs:
            del w[x][v]
        w[v] = {}
        if len(nbrs) == 1:
            const += max(nbrs[0][1], 0)
        elif len(nbrs) == 2:
            (x, a), (y, b) = nbrs
            same = max(a + b, 0)
            apart = max(a, b)
            const += same
            nw = w[x].get(y, 0) + apart - same
            if nw:
                w[x][y] = w[y][x] = nw
            else:
                w[x].pop(y, None)
                w[y].pop(x, None)
        queue.extend(x for x, _ in nbrs if x in alive and len(w[x]) <= 2)
    return const, log, sorted(alive)


class _BranchAndBound:
    """Depth-first search over side assignments of the core vertices.

    The first vertex (largest total weight) is pinned to side 0. A subtree is
    pruned when ``current + sum(best gain of each unassigned vertex towards
    assigned ones) + positive weight among unassigned vertices`` cannot beat
    the incumbent; this bound stays admissible with negative weights.
    """

    def __init__(self, w: list[dict[int, int]], core: list[int]):
        self.order = sorted(core, key=lambda v: (-sum(abs(m) for m in w[v].values()), v))
        pos = {v: i for i, v in enumerate(self.order)}
        self.nbrs = [[(pos[u], m) for u, m in w[v].items()] for v in self.order]

    def search(self, floor: int, first_only: bool = False):
        """Best assignment worth more than ``floor`` (or any such, if ``first_only``)."""
        k = len(self.order)
        nbrs = self.nbrs
        side = [-1] * k
        to = [[0] * k, [0] * k]
        free_pos = sum(m for i in range(k) for j, m in nbrs[i] if j > i and m > 0)
        best_value, best_side = floor, None

        def dfs(depth: int, current: int, free_pos: int) -> bool:
            nonlocal best_value, best_side
            if depth == k:
                if current > best_value:
                    best_value, best_side = current, side[:]
                    return True
                return False
            optimistic = current + free_pos
            for u in range(depth, k):
                optimistic += to[0][u] if to[0][u] > to[1][u] else to[1][u]
            if optimistic <= best_value:
                return False
            # side s gains the weight towards vertices already on the other side
            gain = (to[1][depth], to[0][depth])
            if depth == 0:
                choices = (0,)
            else:
                choices = (0, 1) if gain[0] >= gain[1] else (1, 0)
            lost = sum(m for j, m in nbrs[depth] if j > depth and m > 0)
            improved = False
            for s in choices:
                side[depth] = s
                for j, m in nbrs[depth]:
                    if j > depth:
                        to[s][j] += m
                if dfs(depth + 1, current + gain[s], free_pos - lost):
                    improved = True
                for j, m in nbrs[depth]:
                    if j > depth:
                        to[s][j] -= m
                side[depth] = -1
                if improved and first_only:
                    return True
            return improved

        dfs(0, 0, free_pos)
        if best_side is None:
            return floor, None
        return best_value, dict(zip(self.order, best_side))


def _reduce(g: Multigraph, limit: int | None):
    w = _weights(g)
    const, log, core = _eliminate(w)
    cap = size_limit(limit)
    if len(core) > cap:
        raise InstanceTooLarge(
            f"max-cut core has {len(core)} vertices after reduction, limit is {cap} "
            f"(set {LIMIT_ENV} to raise it)"
        )
    return w, const, log, core


def _place_eliminated(n: int, core_side: dict[int, int], log) -> list[int]:
    side = [0] * n
    for v, s in core_side.items():
        side[v] = s
    for v, nbrs in reversed(log):
        # side 0 gains weight to side-1 neighbors and vice versa
        g0 = sum(m for x, m in nbrs if side[x] == 1)
        g1 = sum(m for x, m in nbrs if side[x] == 0)
        side[v] = 1 if g1 > g0 else 0
    return side


def max_cut_exact(g: Multigraph, limit: int | None = None) -> tuple[int, Cut]:
    """Return ``(mu(g), witness)``; the witness is the side holding ``g.vertices[0]``."""
    n = len(g.vertices)
    if n == 0:
        return 0, Cut(frozenset(), 0)
    w, const, log, core = _reduce(g, limit)
    core_side: dict[int, int] = {}
    value = 0
    if core:
        value, core_side = _BranchAndBound(w, core).search(floor=-(1 << 62))
    side = _place_eliminated(n, core_side, log)
    anchor = side[0]
    witness = frozenset(v for i, v in enumerate(g.vertices) if side[i] == anchor)
    size = cut_size(g, witness)
    if size != value + const:
        raise InternalInconsistency(f"witness cuts {size} edges, search reported {value + const}")
    return size, Cut(witness, size)


def decide_max_cut_at_most(g: Multigraph, t: int, limit: int | None = None) -> bool:
    """True iff ``mu(g) <= t``; the search stops at the first cut larger than ``t``."""
    if not g.vertices:
        return 0 <= t
    w, const, _, core = _reduce(g, limit)
    if not core:
        return const <= t
    _, found = _BranchAndBound(w, core).search(floor=t - const, first_only=True)
    return found is None


def max_cut_bruteforce(g: Multigraph, limit: int = BRUTEFORCE_LIMIT) -> tuple[int, Cut]:
    """Enumerate all ``2**(n-1)`` cuts (last vertex pinned) and return the best."""
    n = len(g.vertices)
    if n > limit:
        raise InstanceTooLarge(f"{n} vertices exceeds the enumeration limit {limit}")
    if n <= 1:
        return 0, Cut(frozenset(g.vertices), 0)
    idx = {v: i for i, v in enumerate(g.vertices)}
    edges = [(idx[u], idx[v], m) for (u, v), m in g.edges.items()]
    total = 1 << (n - 1)
    chunk = 1 << 20
    best_size, best_mask = -1, 0
    for start in range(0, total, chunk):
        masks = np.arange(start, min(total, start + chunk), dtype=np.int64)
        sizes = np.zeros_like(masks)
        for u, v, m in edges:
            sizes += m * (((masks >> u) ^ (masks >> v)) & 1)
        i = int(np.argmax(sizes))
        if sizes[i] > best_size:
            best_size, best_mask = int(sizes[i]), int(masks[i])
    side = frozenset(v for v, i in idx.items() if best_mask >> i & 1)
    return best_size, Cut(side, best_size)
