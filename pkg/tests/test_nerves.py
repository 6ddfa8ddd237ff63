from __future__ import annotations

from itertools import product

import numpy as np
import pytest

from catelements.io import category_from_doc, two_category_from_doc
from catelements.nerves import (nerve_category, nerve_double_category, nerve_two_category,
                                validate_simplicial_category)
from catelements.simplicial import validate_bisimplicial
from helpers import ALL_FIXTURES, bar_pair, fixture

PARALLEL = {"objects": ["a", "b"], "morphisms": [{"id": "u", "src": "a", "tgt": "b"},
                                                 {"id": "v", "src": "a", "tgt": "b"}]}


def test_walking_parallel_pair_nondegenerate_counts():
    S = nerve_category(category_from_doc(PARALLEL), 4)
    assert S.nondegenerate_counts() == [2, 2, 0, 0, 0]


def test_fibre_of_walking_two_cell():
    F = fixture("walking_two_cell")
    Fc = F.category(F.source.obj_labels.index("c"))
    S = nerve_category(Fc, 3)
    assert S.nondegenerate_counts()[:2] == [3, 3]
    edges = sorted(Fc.label(int(S.simplices[1][e][1])) for e in S.nondegenerate(1))
    assert edges == sorted(["phi", "psi", "alpha_x'"])


def test_identity_only_two_category_is_a_point():
    X = nerve_two_category(two_category_from_doc({"objects": ["*"], "homs": []}), 3)
    assert X.sizes() == [[1] * 4 for _ in range(4)]


def test_point_double_category_is_a_point():
    X = bar_pair("point", 3).Xd
    assert X.sizes() == [[1] * 4 for _ in range(4)]


def grids(B, m: int, n: int) -> int:
    """Brute force: m-by-n arrays of squares whose shared edges agree."""
    count = 0
    if m == 0 or n == 0:
        return -1
    for cells in product(B.squares, repeat=m * n):
        grid = [cells[r * m:(r + 1) * m] for r in range(n)]
        ok = all(B.right[grid[r][j]] == B.left[grid[r][j + 1]] for r in range(n) for j in range(m - 1))
        ok = ok and all(B.bottom[grid[r][j]] == B.top[grid[r + 1][j]] for r in range(n - 1) for j in range(m))
        count += ok
    return count


def pastings(E, m: int, n: int) -> int:
    """Brute force: m columns, each an n-chain of vertically composable 2-cells, columns adjacent."""
    count = 0
    chains = [c for c in product(E.two_cells, repeat=n)
              if all(E.tgt2[c[i]] == E.src2[c[i + 1]] for i in range(n - 1))]
    for cols in product(chains, repeat=m):
        ok = all(E.tgt1[E.src2[cols[j][0]]] == E.src1[E.src2[cols[j + 1][0]]] for j in range(m - 1))
        count += ok
    return count


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (1, 2), (2, 2)])
def test_grid_counts_match_brute_force(m, n):
    P = bar_pair("walking_two_cell", 2)
    assert P.Xd.size(m, n) == grids(P.B, m, n)
    assert P.X2.size(m, n) == pastings(P.E, m, n)


def test_low_cells_of_double_nerve():
    P = bar_pair("walking_two_cell", 2)
    assert P.Xd.size(1, 0) == len(P.B.horizontals)
    assert P.Xd.size(0, 1) == len(P.B.verticals)
    assert P.Xd.size(0, 0) == len(P.B.objects)


def test_two_cells_appear_as_one_one_simplices():
    P = bar_pair("walking_two_cell", 2)
    E = P.E
    alpha = P.C.cell2_labels.index("alpha")
    found = set()
    for s in range(P.X2.size(1, 1)):
        _, [(_, (a,))] = P.X2.decode(1, 1, s)
        if E.cell2_keys[a][0] == alpha:
            found.add(a)
    assert len(found) == 2


def test_two_zero_cells_are_composable_pairs():
    E = bar_pair("composable", 2).E
    pairs = sum(1 for f in E.one_cells for g in E.one_cells if E.tgt1[f] == E.src1[g])
    assert bar_pair("composable", 2).X2.size(2, 0) == pairs


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_nerves_validate_at_four(name):
    P = bar_pair(name)
    for X in (P.X2, P.Xd):
        rep = validate_bisimplicial(X)
        assert rep.ok, rep
        assert validate_simplicial_category(X.simplicial_category).ok


def same_nerve(S, T) -> bool:
    return (S.sizes() == T.sizes()
            and all(np.array_equal(a, b) for a, b in zip(S.faces, T.faces))
            and all(np.array_equal(a, b) for a, b in zip(S.degeneracies, T.degeneracies)))


@pytest.mark.parametrize("name", ["walking_two_cell", "three_object", "vertical_composition"])
def test_rows_and_columns_are_nerves(name):
    P = bar_pair(name, 3)
    assert same_nerve(P.X2.row(0), nerve_category(P.E.underlying_category(), 3))
    assert same_nerve(P.Xd.row(0), nerve_category(P.B.horizontal_category(), 3))
    assert same_nerve(P.Xd.column(0), nerve_category(P.B.vertical_category(), 3))
