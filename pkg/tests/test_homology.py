from __future__ import annotations

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from catelements.errors import RangeError
from catelements.homology import (MODEL_NAMES, ChainComplex, SparseMatrix, chain_complex, compare_models,
                                  homology, homology_of_complex, invariant_factors, smith_normal_form)
from catelements.nerves import nerve_category
from catelements.simplicial import diagonal
from helpers import ALL_FIXTURES, bar_pair, fixture, walking_two_cell_functors


def sympy_snf(rows: list[list[int]]) -> tuple[int, list[int]]:
    if not rows or not rows[0]:
        return 0, []
    from sympy.matrices.normalforms import smith_normal_form as snf
    D = snf(sympy.Matrix(rows), domain=sympy.ZZ)
    diag = [abs(int(D[i, i])) for i in range(min(D.shape)) if D[i, i] != 0]
    return len(diag), sorted(diag)


matrices = st.integers(1, 6).flatmap(lambda r: st.integers(1, 6).flatmap(
    lambda c: st.lists(st.lists(st.integers(-4, 4), min_size=c, max_size=c), min_size=r, max_size=r)))


@settings(max_examples=200)
@given(matrices)
def test_snf_matches_sympy(rows):
    assert smith_normal_form(rows) == sympy_snf(rows)


@settings(max_examples=50)
@given(matrices)
def test_snf_of_transpose_and_sparse_input(rows):
    M = SparseMatrix.from_dense(rows)
    assert smith_normal_form(M) == smith_normal_form(M.transpose())
    assert M.to_dense() == rows  # input left untouched


def test_invariant_factors_divide_in_turn():
    assert invariant_factors([4, 6]) == [2, 12]
    assert invariant_factors([0, -3, 9, 6]) == [3, 3, 18]
    assert invariant_factors([]) == []


def test_torsion_is_reported():
    K = ChainComplex("rp2", [np.arange(1)] * 3,
                     [SparseMatrix(0, 1), SparseMatrix(1, 1), SparseMatrix.from_dense([[2]])])
    H = homology_of_complex(K, 1)
    assert H.betti() == [1, 0] and H.torsion() == [[], [2]]
    assert [str(g) for g in H.groups] == ["Z", "Z/2"]


def rational_betti(S, up_to: int) -> list[int]:
    """Betti numbers from ranks over Q of dense boundary matrices, computed by sympy."""
    K = chain_complex(S)
    ranks = [0] + [sympy.Matrix(K.boundaries[k].to_dense()).rank() if K.boundaries[k].n_rows and
                   K.boundaries[k].n_cols else 0 for k in range(1, up_to + 2)]
    return [len(K.bases[k]) - ranks[k] - ranks[k + 1] for k in range(up_to + 1)]


def test_point_has_homology_of_a_point():
    P = bar_pair("point")
    for S in (P.W2, P.Wd, diagonal(P.X2)):
        assert homology(S).betti() == [1, 0, 0, 0]


def test_parallel_pair_is_a_circle():
    N = nerve_category(fixture("parallel_pair").source.underlying_category(), 3)
    K = chain_complex(N)
    assert K.ranks()[:3] == [2, 2, 0]
    H = homology(N)
    assert H.betti() == [1, 1, 0] and H.torsion() == [[], [], []]


def test_boundary_squares_to_zero_and_matches_sympy_betti():
    for name in ("walking_two_cell", "vertical_composition", "three_object"):
        P = bar_pair(name, 3)
        for S in (P.W2, P.Wd, diagonal(P.X2), diagonal(P.Xd)):
            K = chain_complex(S)
            for k in range(2, K.max_dim + 1):
                prod = sympy.Matrix(K.boundaries[k - 1].to_dense()) * sympy.Matrix(K.boundaries[k].to_dense())
                assert prod.is_zero_matrix
            assert homology(S).betti() == rational_betti(S, 2)


def test_range_error_past_truncation():
    N = nerve_category(fixture("parallel_pair").source.underlying_category(), 3)
    assert homology(N, 2).trusted_up_to == 2
    with pytest.raises(RangeError):
        homology(N, 3)
    with pytest.raises(RangeError):
        homology(N, -1)


def test_bar_bases_agree_in_size():
    P = bar_pair("walking_two_cell")
    assert chain_complex(P.W2).ranks() == chain_complex(P.Wd).ranks() == [4, 8, 7, 2, 0]


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_models_agree_on_fixtures(name):
    D = 4 if name != "composable" else 3
    rep = compare_models(fixture(name), D, bar_pair(name, D))
    assert rep["agree"], rep["models"]
    assert set(rep["models"]) == set(MODEL_NAMES)


def test_poset_discrete_has_three_components():
    P = bar_pair("poset_discrete")
    E = P.E
    parent = list(range(len(E.obj_keys)))

    def find(i):
        while parent[i] != i:
            i = parent[i]
        return i

    for u in range(len(E.cell1_keys)):
        parent[find(E.src1[u])] = find(E.tgt1[u])
    components = len({find(i) for i in range(len(parent))})
    assert components == 3
    assert homology(diagonal(P.X2)).betti() == [3, 0, 0, 0]


@settings(max_examples=6)
@given(walking_two_cell_functors())
def test_models_agree_on_random_functors(F):
    assert compare_models(F, 3)["agree"]
