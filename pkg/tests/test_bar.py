from __future__ import annotations

from itertools import product

import pytest
from hypothesis import given, settings

from catelements.bar import bar_construction, bar_count_report
from catelements.nerves import nerve_category, nerve_two_category
from catelements.simplicial import TruncatedBisimplicialSet, validate_simplicial
from helpers import ALL_FIXTURES, bar_pair, chain_functors, fixture, walking_two_cell_functors
from catelements import BarPair


def matching(X: TruncatedBisimplicialSet, row) -> bool:
    k = len(row) - 1
    return all(X.vfaces[(j, k - j)][0][row[j]] == X.hfaces[(j + 1, k - j - 1)][j + 1][row[j + 1]]
               for j in range(k))


def brute_force_level(X: TruncatedBisimplicialSet, k: int) -> set[tuple]:
    ranges = [range(X.size(j, k - j)) for j in range(k + 1)]
    return {row for row in product(*ranges) if matching(X, row)}


def test_bar_of_the_point_is_a_point():
    P = bar_pair("point")
    for W in (P.W2, P.Wd):
        assert [W.size(k) for k in range(5)] == [1] * 5
        assert W.nondegenerate_counts() == [1, 0, 0, 0, 0]


def test_walking_two_cell_level_sizes():
    P = bar_pair("walking_two_cell")
    for W in (P.W2, P.Wd):
        assert [W.size(k) for k in range(5)] == [4, 12, 27, 51, 86]
        assert W.nondegenerate_counts() == [4, 8, 7, 2, 0]


@pytest.mark.parametrize("name", ["walking_two_cell", "parallel_pair", "three_object", "vertical_composition"])
def test_levels_match_brute_force_enumeration(name):
    P = bar_pair(name)
    for X, W in ((P.X2, P.W2), (P.Xd, P.Wd)):
        for k in range(3):
            assert {tuple(r) for r in W.rows[k].tolist()} == brute_force_level(X, k)


def test_degree_one_simplices_of_the_double_bar_are_corners():
    P = bar_pair("walking_two_cell")
    B = P.B
    corners = set()
    for t0, t1 in P.Wd.rows[1].tolist():
        (_, (v,)), _ = P.Xd.decode(0, 1, t0)
        (o, _), [(h, _)] = P.Xd.decode(1, 0, t1)
        # the vertical ends where the horizontal starts
        assert B.vtgt[v] == B.hsrc[h]
        corners.add((v, h))
    assert corners == {(v, h) for v in range(len(B.ver_keys)) for h in range(len(B.hor_keys))
                       if B.vtgt[v] == B.hsrc[h]}


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_rows_satisfy_matching_and_validate(name):
    P = bar_pair(name)
    for X, W in ((P.X2, P.W2), (P.Xd, P.Wd)):
        assert validate_simplicial(W).ok
        for k in range(W.max_dim + 1):
            assert all(matching(X, row) for row in W.rows[k].tolist())


def test_lookup_row_round_trip():
    W = bar_pair("walking_two_cell").Wd
    for k in range(3):
        for s, row in enumerate(W.rows[k].tolist()):
            assert W.lookup_row(k, row) == s


def test_bar_degree_cannot_exceed_truncation():
    X = nerve_two_category(bar_pair("point").E, 2)
    with pytest.raises(ValueError):
        bar_construction(X, 3)


def test_bar_count_report():
    rep = bar_count_report(bar_pair("walking_two_cell").W2)
    assert [r["size"] for r in rep] == [4, 12, 27, 51, 86]
    assert [r["k"] for r in rep] == list(range(5))


def test_bar_of_a_constant_bisimplicial_nerve_has_the_nerve_sizes():
    """For a 1-category seen as a locally discrete 2-category the bar is the ordinary nerve."""
    F = fixture("parallel_pair")
    C = F.source
    W = bar_construction(nerve_two_category(C, 3))
    N = nerve_category(C.underlying_category(), 3)
    assert [W.size(k) for k in range(4)] == [N.size(k) for k in range(4)]


@settings(max_examples=10)
@given(walking_two_cell_functors())
def test_random_bars_validate_and_agree_in_size(F):
    P = BarPair(F, 3)
    assert validate_simplicial(P.W2).ok and validate_simplicial(P.Wd).ok
    assert [P.W2.size(k) for k in range(4)] == [P.Wd.size(k) for k in range(4)]


@settings(max_examples=10)
@given(chain_functors())
def test_random_chain_bars_agree_in_size(F):
    P = BarPair(F, 3)
    assert [P.W2.size(k) for k in range(4)] == [P.Wd.size(k) for k in range(4)]
