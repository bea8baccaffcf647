"""Necklaces: ordered families of disjoint, odd-sized point sets on the line.

Two input formats are understood:

* a structured document ``{"colors": {"a": [1, 2, 9], "b": [3, 4, 5]}}``
* a compact string such as ``"aabbbaa"`` where character ``i`` is a single
  point of that color at coordinate ``i``.

All algorithms only look at the left-to-right order of the points, so
coordinates are kept as exact :class:`~fractions.Fraction` values.
"""

from __future__ import annotations

import json
import string
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import groupby
from typing import Iterable, Mapping

import numpy as np

from .errors import (
    DisjointnessViolation,
    InstanceTooLarge,
    MalformedInput,
    OddnessViolation,
)

SEP_DEFINITION_LIMIT = 16

_TOKEN_CHARS = set(string.printable) - set(string.whitespace)


def _coerce_coordinate(value) -> Fraction:
    if isinstance(value, bool):
        raise MalformedInput(f"coordinate {value!r} is not a number")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except ValueError:
            pass
    raise MalformedInput(f"coordinate {value!r} is neither an integer nor a rational string")


def _check_token(token) -> str:
    if not isinstance(token, str) or not token or not set(token) <= _TOKEN_CHARS:
        raise MalformedInput(f"color token {token!r} must be a nonempty ASCII string without whitespace")
    return token


class Necklace:
    """An immutable, validated necklace.

    ``colors`` maps each color token to its sorted coordinates; tokens are kept
    in sorted order so that two necklaces with the same content compare and
    serialize identically.
    """

    def __init__(self, colors: Mapping[str, Iterable]):
        normalized: dict[str, tuple[Fraction, ...]] = {}
        owner: dict[Fraction, str] = {}
        for token in sorted(colors, key=str):
            token = _check_token(token)
            points = sorted(_coerce_coordinate(x) for x in colors[token])
            if not points:
                raise MalformedInput(f"color {token!r} is empty")
            for x in points:
                if x in owner:
                    raise DisjointnessViolation(
                        f"coordinate {x} occurs in both {owner[x]!r} and {token!r}"
                        if owner[x] != token
                        else f"coordinate {x} repeated in color {token!r}"
                    )
                owner[x] = token
            if len(points) % 2 == 0:
                raise OddnessViolation(f"color {token!r} has an even number of points ({len(points)})")
            normalized[token] = tuple(points)
        self._colors = normalized

    @property
    def colors(self) -> Mapping[str, tuple[Fraction, ...]]:
        return dict(self._colors)

    def points(self, color: str) -> tuple[Fraction, ...]:
        return self._colors[color]

    @property
    def color_ids(self) -> tuple[str, ...]:
        return tuple(self._colors)

    @property
    def n(self) -> int:
        return len(self._colors)

    @property
    def size(self) -> int:
        return sum(len(p) for p in self._colors.values())

    @cached_property
    def sequence(self) -> tuple[tuple[Fraction, str], ...]:
        return tuple(sorted((x, c) for c, pts in self._colors.items() for x in pts))

    @cached_property
    def components(self) -> tuple[Component, ...]:
        out = []
        seen: dict[str, int] = {}
        for color, run in groupby(self.sequence, key=lambda item: item[1]):
            idx = seen.get(color, 0)
            seen[color] = idx + 1
            out.append(Component(color, idx, tuple(x for x, _ in run)))
        return tuple(out)

    def components_of(self, color: str) -> tuple[Component, ...]:
        return tuple(comp for comp in self.components if comp.color == color)

    def without(self, *drop: str) -> Necklace:
        return Necklace({c: p for c, p in self._colors.items() if c not in drop})

    def with_color(self, color: str, points: Iterable) -> Necklace:
        new = dict(self._colors)
        new[color] = tuple(points)
        return Necklace(new)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Necklace):
            return NotImplemented
        return self._colors == other._colors

    def __hash__(self) -> int:
        return hash(tuple(self._colors.items()))

    def __repr__(self) -> str:
        body = ", ".join(f"{c}={[_jsonable(x) for x in p]}" for c, p in self._colors.items())
        return f"Necklace({body})"


@dataclass(frozen=True)
class Component:
    """A maximal run of a single color in the left-to-right order."""

    color: str
    index: int
    points: tuple[Fraction, ...]

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class IntervalInfo:
    is_interval: dict[str, bool]
    neighboring_pair: tuple[str, str] | None
    two_component: str | None


def _jsonable(x: Fraction) -> int | str:
    return int(x) if x.denominator == 1 else str(x)


def necklace_from_document(doc) -> Necklace:
    if not isinstance(doc, Mapping) or not isinstance(doc.get("colors"), Mapping):
        raise MalformedInput('instance document must be an object with a "colors" object')
    colors = doc["colors"]
    for token, pts in colors.items():
        if not isinstance(pts, list):
            raise MalformedInput(f"points of color {token!r} must be a list")
    return Necklace(colors)


def necklace_from_compact(text: str) -> Necklace:
    text = text.strip()
    if not text or any(ch not in string.ascii_lowercase for ch in text):
        raise MalformedInput("compact necklaces use one lowercase letter per point")
    colors: dict[str, list[int]] = {}
    for i, ch in enumerate(text):
        colors.setdefault(ch, []).append(i)
    return Necklace(colors)


def parse_necklace(text: str) -> Necklace:
    """Parse either a JSON instance document or a compact letter string."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise MalformedInput(f"invalid JSON: {exc}") from exc
        return necklace_from_document(doc)
    return necklace_from_compact(stripped)


def to_document(nk: Necklace) -> dict:
    return {"colors": {c: [_jsonable(x) for x in pts] for c, pts in nk.colors.items()}}


def dumps(nk: Necklace) -> str:
    return json.dumps(to_document(nk), indent=2)


def color_string(nk: Necklace) -> tuple[str, ...]:
    return tuple(comp.color for comp in nk.components)


def component_counts(nk: Necklace) -> dict[str, int]:
    counts = dict.fromkeys(nk.color_ids, 0)
    for comp in nk.components:
        counts[comp.color] += 1
    return counts


def interval_queries(nk: Necklace) -> IntervalInfo:
    """Which colors are intervals, plus the first reducible structure.

    Both "first" choices follow a left-to-right scan of the color string.
    """
    counts = component_counts(nk)
    is_interval = {c: k == 1 for c, k in counts.items()}
    cs = color_string(nk)
    pair = next(
        ((u, v) for u, v in zip(cs, cs[1:]) if is_interval[u] and is_interval[v]),
        None,
    )
    two = next((c for c in cs if counts[c] == 2), None)
    return IntervalInfo(is_interval, pair, two)


def separability_witness(nk: Necklace, limit: int = SEP_DEFINITION_LIMIT) -> tuple[int, frozenset[str]]:
    """Return ``(sep(C), A)`` where ``A`` is a color subset needing ``sep(C)`` separators.

    Works straight from the definition: for every subset ``A`` the number of
    separators equals the number of places where the color string switches
    between ``A`` and its complement.
    """
    ids = nk.color_ids
    if len(ids) > limit:
        raise InstanceTooLarge(f"{len(ids)} colors exceeds the subset-enumeration limit {limit}")
    index = {c: i for i, c in enumerate(ids)}
    cs = [index[c] for c in color_string(nk)]
    masks = np.arange(1 << len(ids), dtype=np.int64)
    switches = np.zeros_like(masks)
    for u, v in zip(cs, cs[1:]):
        switches += ((masks >> u) ^ (masks >> v)) & 1
    best = int(np.argmax(switches))
    return int(switches[best]), frozenset(c for c, i in index.items() if best >> i & 1)


def sep_by_definition(nk: Necklace, limit: int = SEP_DEFINITION_LIMIT) -> int:
    return separability_witness(nk, limit)[0]
