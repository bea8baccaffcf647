"""Brute-force ground truth: every splitting found by trying every point tuple.

Deliberately independent of :mod:`necksplit.splitter`: points are replaced by
their rank in the left-to-right order and each candidate tuple is labelled
with numpy, in chunks.
"""

from __future__ import annotations

from math import prod

import numpy as np

from .errors import InstanceTooLarge
from .necklace import Necklace
from .splitter import Splitting

ENUMERATION_LIMIT = 10**6
_CHUNK = 1 << 15


def enumerate_solutions(nk: Necklace, limit: int = ENUMERATION_LIMIT) -> list[Splitting]:
    """All balanced choices of one point per color, in lexicographic tuple order."""
    ids = nk.color_ids
    sizes = [len(nk.points(c)) for c in ids]
    total = prod(sizes)
    if total > limit:
        raise InstanceTooLarge(f"{total} candidate tuples exceeds the oracle limit {limit}")

    rank = {x: r for r, (x, _) in enumerate(nk.sequence)}
    color_of = np.array([ids.index(c) for _, c in nk.sequence])
    ranks = [np.array([rank[x] for x in nk.points(c)]) for c in ids]
    all_points = np.arange(len(nk.sequence))
    n = len(ids)

    found: list[Splitting] = []
    for start in range(0, total, _CHUNK):
        flat = np.arange(start, min(total, start + _CHUNK))
        choice = np.stack(np.unravel_index(flat, sizes), axis=1)
        cut_ranks = np.stack([ranks[i][choice[:, i]] for i in range(n)], axis=1)
        # splits strictly left of every point, then +1 / -1 by parity
        left = (cut_ranks[:, None, :] < all_points[None, :, None]).sum(axis=2)
        sign = np.where(left % 2 == 0, 1, -1)
        is_cut = (cut_ranks[:, None, :] == all_points[None, :, None]).any(axis=2)
        sign[is_cut] = 0
        balance = np.zeros((len(flat), n), dtype=np.int64)
        for i in range(n):
            balance[:, i] = sign[:, color_of == i].sum(axis=1)
        for row in np.flatnonzero(~balance.any(axis=1)):
            found.append(Splitting.of((c, nk.points(c)[choice[row, i]]) for i, c in enumerate(ids)))
    return found


def count_solutions(nk: Necklace, limit: int = ENUMERATION_LIMIT) -> int:
    return len(enumerate_solutions(nk, limit))
