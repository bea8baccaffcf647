"""Deciding ``mu(G) <= n - 1 + ell`` for semi-Eulerian multigraphs.

Pipeline: strip adjacent pairs of degree-<=2 vertices (each strip lowers the
max cut by exactly 2), reject when the interval vertices alone already cut
too many edges, reject when the multi-edges are too heavy (more than
``2 * ell**2`` in total), and otherwise blow every multi-edge up into paths of
length three and ask the exact max-cut backend.
"""

from __future__ import annotations

import logging
from dataclasses import asdict, dataclass
from enum import Enum
from fractions import Fraction
from typing import NamedTuple

from .errors import DomainViolation
from .maxcut import decide_max_cut_at_most, max_cut_exact
from .walkgraph import Multigraph, check_semi_eulerian, edwards_erdos_bound

log = logging.getLogger(__name__)

SMALL_GRAPH = 8
BACKEND = "exact branch-and-bound max-cut"


class FiredCheck(str, Enum):
    INTERVAL_COUNT = "interval-count"
    MULTIPLICITY = "multiplicity"
    MAXCUT_THRESHOLD = "maxcut-threshold"
    TRIVIALLY_SMALL = "trivially-small"


@dataclass(frozen=True)
class SeparabilityVerdict:
    decision: bool
    fired_check: FiredCheck
    ell: int
    n: int
    pairs_removed: int
    n_prime: int
    threshold: Fraction
    interval_count: int | None = None
    interval_cut: int | None = None
    multiedge_multiplicity: int | None = None
    omega_final: Fraction | None = None
    gap_k: Fraction | None = None
    interval_rule: str = "cut"
    backend: str = BACKEND

    def to_document(self) -> dict:
        diag = asdict(self)
        decision = diag.pop("decision")
        fired = diag.pop("fired_check")
        for key, value in diag.items():
            if isinstance(value, Fraction):
                diag[key] = int(value) if value.denominator == 1 else str(value)
        return {"decision": decision, "fired_check": FiredCheck(fired).value, "diagnostics": diag}


class Reduction(NamedTuple):
    graph: Multigraph
    pairs_removed: int
    stopped_small: bool


def is_interval(g: Multigraph, v) -> bool:
    return g.degree(v) <= 2


def find_interval_pair(g: Multigraph):
    """First adjacent pair of degree-<=2 vertices in vertex order, or None."""
    for u in g.vertices:
        if not is_interval(g, u):
            continue
        for v in g.neighbors(u):
            if is_interval(g, v):
                return u, v
    return None


def remove_interval_pair(g: Multigraph, c, d) -> Multigraph:
    """Delete adjacent low-degree vertices ``c`` and ``d``, bridging their outer neighbors.

    The bridge becomes a self-loop when both outer neighbors coincide, and is
    dropped. No bridge is added when either vertex has no outer neighbor.
    """
    if d not in g.neighbors(c) or not (is_interval(g, c) and is_interval(g, d)):
        raise DomainViolation(f"{c!r} and {d!r} are not adjacent intervals")

    def outer(x, y):
        return [z for z, m in g.neighbors(x).items() if z != y for _ in range(m)]

    a, b = outer(c, d), outer(d, c)
    keep = [v for v in g.vertices if v not in (c, d)]
    edges = {e: m for e, m in g.edges.items() if c not in e and d not in e}
    if a and b and a[0] != b[0]:
        key = (a[0], b[0])
        edges[key] = edges.get(key, 0) + edges.pop((b[0], a[0]), 0) + 1
    loops = {v: m for v, m in g.loops.items() if v in keep}
    return Multigraph(keep, edges, loops)


def reduce_interval_pairs(g: Multigraph, small: int = SMALL_GRAPH) -> Reduction:
    """Strip interval pairs until none is left or the graph has ``<= small`` vertices."""
    g = g.without_loops()
    removed = 0
    while True:
        pair = find_interval_pair(g)
        if pair is None:
            return Reduction(g, removed, False)
        if len(g.vertices) <= small:
            return Reduction(g, removed, True)
        g = remove_interval_pair(g, *pair)
        removed += 1


def total_multiedge_multiplicity(g: Multigraph) -> int:
    return sum(m for m in g.edges.values() if m >= 2)


def _fresh_namer(g: Multigraph):
    taken = set(g.vertices)
    if all(isinstance(v, int) and not isinstance(v, bool) for v in taken):
        counter = iter(range(max(taken, default=-1) + 1, 1 << 62))
        return lambda *_: next(counter)

    def name(a, b, j, k):
        candidate = f"{a}~{b}#{j}.{k}"
        while candidate in taken:
            candidate = "_" + candidate
        taken.add(candidate)
        return candidate

    return name


def blow_up_multiedges(g: Multigraph) -> tuple[Multigraph, int]:
    """Replace each edge of multiplicity ``m >= 2`` by ``m`` disjoint paths of length 3.

    Returns the simple graph and the total multiplicity ``M`` of the replaced edges.
    """
    if g.loops:
        raise DomainViolation("drop self-loops before blowing up multi-edges")
    fresh = _fresh_namer(g)
    vertices = list(g.vertices)
    edges: dict = {}
    total = 0
    for (a, b), m in g.edges.items():
        if m == 1:
            edges[(a, b)] = 1
            continue
        total += m
        for j in range(1, m + 1):
            i1, i2 = fresh(a, b, j, 1), fresh(a, b, j, 2)
            vertices += [i1, i2]
            edges[(a, i1)] = edges[(i1, i2)] = edges[(i2, b)] = 1
    return Multigraph(vertices, edges), total


def decide_separability(g: Multigraph, ell: int, interval_rule: str = "cut") -> SeparabilityVerdict:
    """Decide whether ``mu(g) <= |V(g)| - 1 + ell``.

    ``interval_rule="literal"`` rejects when the interval count exceeds
    ``(n' + ell) / 2``. That rule overlooks degree-1 intervals at the two ends
    of the walk and can reject separable inputs (e.g. the walk graph of
    ``xuuvuy`` with ``ell = 1``). The default ``"cut"`` rule rejects only when
    the cut formed by all intervals, which is exactly the sum of their degrees
    since they are pairwise non-adjacent, exceeds ``n' - 1 + ell``.
    """
    if ell < 0:
        raise ValueError("ell must be non-negative")
    if interval_rule not in ("cut", "literal"):
        raise ValueError(f"unknown interval rule {interval_rule!r}")
    if not check_semi_eulerian(g):
        raise DomainViolation("separability testing needs a connected semi-Eulerian multigraph")

    n = len(g.vertices)
    reduced, removed, stopped_small = reduce_interval_pairs(g)
    n1 = len(reduced.vertices)
    budget = n1 - 1 + ell
    common = dict(ell=ell, n=n, pairs_removed=removed, n_prime=n1, interval_rule=interval_rule)

    if stopped_small:
        mu, _ = max_cut_exact(reduced)
        return SeparabilityVerdict(mu <= budget, FiredCheck.TRIVIALLY_SMALL, threshold=Fraction(budget), **common)

    intervals = [v for v in reduced.vertices if is_interval(reduced, v)]
    i = len(intervals)
    interval_cut = sum(reduced.degree(v) for v in intervals)
    if interval_rule == "literal":
        threshold = Fraction(n1 + ell, 2)
        reject = i > threshold
    else:
        threshold = Fraction(budget)
        reject = interval_cut > budget
    common.update(interval_count=i, interval_cut=interval_cut)
    if reject:
        return SeparabilityVerdict(False, FiredCheck.INTERVAL_COUNT, threshold=threshold, **common)

    big_m = total_multiedge_multiplicity(reduced)
    common["multiedge_multiplicity"] = big_m
    if big_m > 2 * ell * ell:
        return SeparabilityVerdict(False, FiredCheck.MULTIPLICITY, threshold=Fraction(2 * ell * ell), **common)

    simple, _ = blow_up_multiedges(reduced)
    target = budget + 2 * big_m
    omega = edwards_erdos_bound(simple)
    decision = decide_max_cut_at_most(simple, target)
    log.debug("n'=%d M=%d target=%d omega=%s decision=%s", n1, big_m, target, omega, decision)
    return SeparabilityVerdict(
        decision,
        FiredCheck.MAXCUT_THRESHOLD,
        threshold=Fraction(target),
        omega_final=omega,
        gap_k=target - omega,
        **common,
    )
