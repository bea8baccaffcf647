from itertools import product
from math import prod

import pytest
from hypothesis import given

from necksplit.errors import InstanceTooLarge
from necksplit.necklace import Necklace, sep_by_definition
from necksplit.oracle import count_solutions, enumerate_solutions
from necksplit.splitter import Splitting, verify_splitting

from .conftest import necklaces
from .test_splitter import naive_solutions

ABCA = Necklace({"a": [1, 2, 9], "b": [3, 4, 5], "c": [6, 7, 8]})
ABA = Necklace({"a": [1, 2, 7], "b": [3, 4, 5]})
A = Necklace({"a": [1, 2, 3]})


@pytest.mark.parametrize(
    "nk, expected",
    [
        (ABA, [[("a", 1), ("b", 4)]]),
        (ABCA, [[("a", 2), ("b", 4), ("c", 7)]]),
        (A, [[("a", 2)]]),
    ],
)
def test_examples(nk, expected):
    assert enumerate_solutions(nk) == [Splitting.of(s) for s in expected]
    assert count_solutions(nk) == 1


def test_limit():
    nk = Necklace({c: [20 * i + j for j in range(11)] for i, c in enumerate("abcdef")})
    with pytest.raises(InstanceTooLarge):
        enumerate_solutions(nk)


def test_several_solutions_in_lexicographic_order():
    # "abab..." style interleaving is far from separable and has many splittings
    nk = Necklace({"a": [0, 2, 4, 6, 8], "b": [1, 3, 5, 7, 9]})
    sols = enumerate_solutions(nk)
    assert len(sols) > 1
    keys = [tuple(s.as_dict()[c] for c in nk.color_ids) for s in sols]
    assert keys == sorted(keys)


@given(necklaces(max_colors=5, max_pts=5))
def test_exhaustive_and_sound(nk):
    found = enumerate_solutions(nk)
    assert found == naive_solutions(nk)
    assert len(found) >= 1
    if prod(len(nk.points(c)) for c in nk.color_ids) <= 400:
        chosen = set(found)
        for choice in product(*(nk.points(c) for c in nk.color_ids)):
            s = Splitting.of(zip(nk.color_ids, choice))
            assert verify_splitting(nk, s).valid == (s in chosen)


@given(necklaces(max_colors=6, max_pts=5))
def test_separable_means_unique(nk):
    if sep_by_definition(nk) <= nk.n:
        assert count_solutions(nk) == 1
