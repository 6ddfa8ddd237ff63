from __future__ import annotations

import pytest
from hypothesis import given, settings

from catelements.category_core import validate_category, validate_functor
from catelements.hocolim import (hocolim_bisimplicial, hocolim_face_d0, hocolim_level,
                                 hocolim_simplicial_category)
from catelements.homology import homology
from catelements.nerves import nerve_category, validate_simplicial_category
from catelements.simplicial import validate_bisimplicial, validate_simplicial
from helpers import ALL_FIXTURES, chain_functors, fixture, walking_two_cell_functors


def chains(C, n: int) -> list[tuple]:
    """All (c_0, (f_1..f_n)) with f_i: c_i -> c_{i-1}, by direct recursion."""
    out = [(c, ()) for c in C.objects]
    for _ in range(n):
        out = [(c0, fs + (f,)) for c0, fs in out for f in C.one_cells
               if C.tgt1[f] == (C.src1[fs[-1]] if fs else c0)]
    return out


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_level_sizes_match_chain_enumeration(name):
    F = fixture(name)
    for n in range(3):
        L = hocolim_level(F, n)
        assert validate_category(L).ok
        assert L.n_objects == sum(F.category(c0).n_objects for c0, _ in chains(F.source, n))


def test_level_zero_is_the_disjoint_union_of_fibres():
    F = fixture("three_object")
    L = hocolim_level(F, 0)
    assert L.n_objects == sum(F.category(c).n_objects for c in F.source.objects)
    assert L.n_morphisms == sum(F.category(c).n_morphisms for c in F.source.objects)


def test_walking_two_cell_level_one_objects():
    F = fixture("walking_two_cell")
    C = F.source
    cp = C.obj_labels.index("c'")
    keys = {(C.obj_label(c0), F.category(c0).obj_label(x), tuple(C.label1(f) for f in fs))
            for c0, x, fs in hocolim_level(F, 1).obj_labels}
    assert ("c'", "x'", ("f",)) in keys and ("c'", "x'", ("g",)) in keys
    assert cp in C.objects


def test_constant_point_on_parallel_pair_level_one():
    L = hocolim_level(fixture("parallel_pair"), 1)
    # one object per arrow of the base, identities included
    assert L.n_objects == 4


def test_face_d0_on_identities_and_on_alpha():
    F = fixture("walking_two_cell")
    C = F.source
    d0 = hocolim_face_d0(F, 1)
    assert validate_functor(d0).ok
    L1 = hocolim_level(F, 1)
    cp, c = C.obj_labels.index("c'"), C.obj_labels.index("c")
    alpha = C.cell2_labels.index("alpha")
    x = F.category(cp).objects[0]
    id_x = F.category(cp).identity[x]
    for m, (c0, phi, a) in enumerate(L1.mor_labels):
        c1, first, rest = d0.target.mor_labels[d0.mor_map[m]]
        if C.identity2[C.src2[a[0]]] == a[0] and F.category(c0).is_identity(phi):
            assert F.category(c1).is_identity(first)
        if (c0, phi, a) == (cp, id_x, (alpha,)):
            assert (c1, first) == (c, F.component(alpha, x))
            assert F.category(c).label(first) == "alpha_x'"


def test_face_d0_reindexes_on_discrete_fibres():
    F = fixture("poset_discrete")
    d0 = hocolim_face_d0(F, 1)
    for (c0, x, (f,)), image in zip(d0.source.obj_labels, d0.obj_map):
        assert d0.target.obj_labels[image] == (F.source.src1[f], F.push_object(f, x), ())


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_hocolim_validates(name):
    F = fixture(name)
    S = hocolim_simplicial_category(F, 3)
    assert validate_simplicial_category(S).ok
    Y, diag = hocolim_bisimplicial(F, 3)
    assert validate_bisimplicial(Y).ok and validate_simplicial(diag).ok


def test_constant_point_diagonal_has_base_nerve_homology():
    F = fixture("parallel_pair")
    _, diag = hocolim_bisimplicial(F, 3)
    base = nerve_category(F.source.underlying_category(), 3)
    assert homology(diag).key() == homology(base).key()
    assert homology(diag).betti() == [1, 1, 0]


@settings(max_examples=15)
@given(walking_two_cell_functors())
def test_random_hocolim_validates(F):
    S = hocolim_simplicial_category(F, 3)
    assert validate_simplicial_category(S).ok


@settings(max_examples=15)
@given(chain_functors())
def test_random_chain_hocolim_validates(F):
    Y, diag = hocolim_bisimplicial(F, 2)
    assert validate_bisimplicial(Y).ok
