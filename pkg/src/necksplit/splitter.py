"""Splitting a necklace between two thieves on ``(n - 1 + ell)``-separable inputs.

A splitting places exactly one split point on a point of every color; the
``n + 1`` open pieces between them are labelled ``+``, ``-``, ``+``, ... from
the left and every color must have equally many points under each label.

:func:`solve` recurses: small instances go to :func:`base_case_solve`,
otherwise two neighboring interval colors are removed (their medians are
added back afterwards), or a color with two components is cut down to its
larger component and the split point is shifted back afterwards.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import ceil

from .errors import InternalInconsistency, MalformedSplitting
from .necklace import Necklace, _jsonable, interval_queries, to_document

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Splitting:
    """Split points as ``(color, coordinate)`` pairs, sorted by coordinate."""

    splits: tuple[tuple[str, Fraction], ...]
    diagnostics: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "splits", tuple(sorted(self.splits, key=lambda s: s[1])))

    @classmethod
    def of(cls, pairs, **diagnostics) -> Splitting:
        return cls(tuple((c, Fraction(x)) for c, x in pairs), diagnostics)

    def as_dict(self) -> dict[str, Fraction]:
        return dict(self.splits)

    def to_document(self) -> list[dict]:
        return [{"color": c, "coordinate": _jsonable(x)} for c, x in self.splits]


@dataclass(frozen=True)
class BalanceReport:
    counts: dict[str, tuple[int, int]]
    valid: bool

    def to_document(self) -> dict:
        return {
            "valid": self.valid,
            "colors": {c: {"plus": p, "minus": m} for c, (p, m) in self.counts.items()},
        }


@dataclass(frozen=True)
class NotSeparableCertificate:
    residual: Necklace
    n: int
    ell: int
    reason: str = "reduction-stuck"

    def to_document(self) -> dict:
        return {
            "certificate": "not-separable",
            "reason": self.reason,
            "n": self.n,
            "ell": self.ell,
            "residual": to_document(self.residual),
        }


def splitting_from_document(doc) -> Splitting:
    if isinstance(doc, dict):
        doc = doc.get("splits")
    if not isinstance(doc, list):
        raise MalformedSplitting('expected a list of {"color", "coordinate"} entries or {"splits": [...]}')
    try:
        return Splitting.of((entry["color"], Fraction(entry["coordinate"])) for entry in doc)
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedSplitting(f"bad split entry: {exc}") from exc


def verify_splitting(nk: Necklace, s: Splitting) -> BalanceReport:
    chosen = s.as_dict()
    if len(chosen) != len(s.splits) or set(chosen) != set(nk.color_ids):
        raise MalformedSplitting("a splitting needs exactly one split point per color")
    for color, x in chosen.items():
        if x not in nk.points(color):
            raise MalformedSplitting(f"split {x} is not a point of color {color!r}")
    cuts = sorted(chosen.values())
    counts = {c: [0, 0] for c in nk.color_ids}
    k = 0
    for x, color in nk.sequence:
        while k < len(cuts) and cuts[k] < x:
            k += 1
        if k < len(cuts) and cuts[k] == x:
            continue
        counts[color][k % 2] += 1
    report = {c: (p, m) for c, (p, m) in counts.items()}
    return BalanceReport(report, all(p == m for p, m in report.values()))


def _forced_split(before: int, inside: int, plus_out: int, minus_out: int) -> int | None:
    """Index inside a chosen component that balances its color, or None.

    ``before`` is the parity of split points left of the component; points
    left of the split inherit it, points right of it get the other label.
    """
    if before % 2 == 0:
        twice = minus_out - plus_out + inside - 1
    else:
        twice = plus_out - minus_out + inside - 1
    if twice % 2 or not 0 <= twice // 2 < inside:
        return None
    return twice // 2


def base_case_solve(nk: Necklace) -> Splitting | None:
    """Guess one component per color to hold its split point.

    A guess fixes the label of every point outside the chosen components,
    which leaves at most one balancing position inside each chosen component.
    Guesses are tried colors-in-sorted-order, components left to right.
    """
    comps = {c: nk.components_of(c) for c in nk.color_ids}
    ids = nk.color_ids
    for guess in product(*(range(len(comps[c])) for c in ids)):
        picked = {c: comps[c][g] for c, g in zip(ids, guess)}
        starts = sorted(comp.points[0] for comp in picked.values())
        splits = []
        for c, comp in picked.items():
            plus = minus = 0
            for other in comps[c]:
                if other is comp:
                    continue
                parity = sum(1 for s in starts if s < other.points[0])
                if parity % 2:
                    minus += len(other)
                else:
                    plus += len(other)
            before = sum(1 for s in starts if s < comp.points[0])
            j = _forced_split(before, len(comp), plus, minus)
            if j is None:
                break
            splits.append((c, comp.points[j]))
        else:
            candidate = Splitting.of(splits)
            if verify_splitting(nk, candidate).valid:
                return candidate
    return None


def median(points) -> Fraction:
    return points[len(points) // 2]


def lift_interval_pair(q: Splitting, nk: Necklace, c: str, d: str) -> Splitting:
    """Add the medians of the removed neighboring intervals ``c`` and ``d``."""
    lifted = Splitting.of(q.splits + ((c, median(nk.points(c))), (d, median(nk.points(d)))))
    if not verify_splitting(nk, lifted).valid:
        raise InternalInconsistency(f"lifting interval pair ({c}, {d}) produced an unbalanced splitting")
    return lifted


def padded_component(points: tuple[Fraction, ...]) -> tuple[tuple[Fraction, ...], Fraction | None]:
    """Pad an even-sized component with the midpoint of its two central points."""
    if len(points) % 2:
        return points, None
    h = len(points) // 2
    pad = (points[h - 1] + points[h]) / 2
    return points[:h] + (pad,) + points[h:], pad


def shift_amount(c1: int, c2: int) -> int:
    return ceil(min(c1, c2) / 2)


def lift_two_component(q: Splitting, nk: Necklace, c: str) -> Splitting:
    """Move the split of ``c`` inside its larger component so ``c`` balances again.

    ``q`` solves the necklace where ``c`` was replaced by its (padded) larger
    component. Both shift directions are tried against the original necklace.
    """
    c1, c2 = nk.components_of(c)
    if len(c1) == len(c2):
        raise InternalInconsistency(f"components of {c!r} have equal size; color would be even")
    big = c1 if len(c1) > len(c2) else c2
    padded, pad = padded_component(big.points)
    x = q.as_dict()[c]
    if x not in padded:
        raise InternalInconsistency(f"recursive split {x} for {c!r} left its larger component")
    at = padded.index(x)
    shift = shift_amount(len(c1), len(c2))
    rest = tuple(s for s in q.splits if s[0] != c)
    between = sum(1 for _, y in rest if c1.points[-1] < y < c2.points[0])
    for direction in (-1, +1):
        k = at + direction * shift
        if not 0 <= k < len(padded) or padded[k] == pad:
            continue
        lifted = Splitting.of(rest + ((c, padded[k]),))
        if verify_splitting(nk, lifted).valid:
            log.debug(
                "two-component lift of %s: kept %s component, %d splits between, shifted %s",
                c, "left" if big is c1 else "right", between, "left" if direction < 0 else "right",
            )
            return lifted
    raise InternalInconsistency(f"neither shift direction balances color {c!r}")


def _solve(nk: Necklace, ell: int, trace: dict) -> Splitting | NotSeparableCertificate:
    # reduce until the base case, remembering how to lift back up
    pending = []
    while nk.n >= 6 * ell + 2:
        info = interval_queries(nk)
        if info.neighboring_pair is not None:
            c, d = info.neighboring_pair
            trace["interval_pairs"] += 1
            pending.append((nk, c, d))
            nk = nk.without(c, d)
        elif info.two_component is not None:
            c = info.two_component
            c1, c2 = nk.components_of(c)
            padded, _ = padded_component((c1 if len(c1) > len(c2) else c2).points)
            trace["two_component"] += 1
            pending.append((nk, c, None))
            nk = nk.with_color(c, padded)
        else:
            return NotSeparableCertificate(nk, nk.n, ell)
    trace["base_cases"] += 1
    q = base_case_solve(nk)
    if q is None:
        raise InternalInconsistency("no component guess yields a splitting")
    for original, c, d in reversed(pending):
        q = lift_two_component(q, original, c) if d is None else lift_interval_pair(q, original, c, d)
    return q


def solve(nk: Necklace, ell: int = 1) -> Splitting | NotSeparableCertificate:
    """Split ``nk`` assuming it is ``(n - 1 + ell)``-separable.

    The promise is not checked. A returned splitting is always verified; a
    certificate proves the promise was false.
    """
    if ell < 1:
        raise ValueError("ell must be a positive integer")
    trace = {"base_cases": 0, "interval_pairs": 0, "two_component": 0}
    result = _solve(nk, ell, trace)
    if isinstance(result, NotSeparableCertificate):
        return result
    if not verify_splitting(nk, result).valid:
        raise InternalInconsistency("solver returned an unbalanced splitting")
    return Splitting(result.splits, {"promise": "unchecked", "ell": ell, "reductions": trace})
