from __future__ import annotations

import pytest
from hypothesis import given, settings

from catelements import BarPair
from catelements.errors import StructuralError
from catelements.thomason_iso import run_negative_controls, verify_thomason_iso
from catelements.thomason_iso.negative import (diagonal_theta, naive_phi_diagonal, naive_phi_row,
                                               naive_theta_column)
from helpers import ALL_FIXTURES, bar_pair, chain_functors, fixture, walking_two_cell_functors

REDUNDANCY = ("redundancy_two_side", "redundancy_objects", "redundancy_verticals", "inner_face_composition")


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_iso_verifies_on_fixtures(name):
    D = 4 if name != "composable" else 3
    rep = verify_thomason_iso(fixture(name), D, bar_pair(name, D))
    assert rep["ok"], {k: v["violations"] for k, v in rep["checks"].items() if v["violations"]}
    assert all(lv["two_side"] == lv["double_side"] for lv in rep["levels"])
    for name_ in REDUNDANCY:
        assert rep["checks"][name_]["violations"] == []


def test_redundancy_checks_are_exercised():
    rep = verify_thomason_iso(fixture("walking_two_cell"), 4, bar_pair("walking_two_cell"))
    for name in REDUNDANCY:
        assert rep["checks"][name]["checked"] > 0


@settings(max_examples=10)
@given(walking_two_cell_functors())
def test_iso_verifies_on_random_functors(F):
    assert verify_thomason_iso(F, 3)["ok"]


@settings(max_examples=8)
@given(chain_functors())
def test_iso_verifies_on_random_chain_functors(F):
    assert verify_thomason_iso(F, 3)["ok"]


@pytest.mark.parametrize("name", ["walking_two_cell", "vertical_composition"])
def test_encode_decode_round_trip(name):
    P = bar_pair(name)
    for p in range(4):
        for s in range(P.W2.size(p)):
            assert P.decode_two_side(P.encode_two_side(p, s)) == s
        for s in range(P.Wd.size(p)):
            assert P.decode_double_side(P.encode_double_side(p, s)) == s


def test_decode_rejects_malformed_data():
    P = bar_pair("walking_two_cell")
    t = P.encode_two_side(2, P.W2.size(2) - 1)
    del t.morphisms[(1, 0)]
    with pytest.raises(StructuralError):
        P.decode_two_side(t)


def test_degree_zero_and_one_correspondence():
    """Φ sends (f, φ): (c, x) → (c', x') to the corner φ: (c, x) → (c, Ff(x')) then (f, x')."""
    P = bar_pair("walking_two_cell")
    E, B, F = P.E, P.B, P.F
    for s in range(P.W2.size(0)):
        u = P.phi(P.encode_two_side(0, s))
        assert B.obj_keys[u.objects[(0, 0)]] == E.obj_keys[P.encode_two_side(0, s).objects[0]]
    for s in range(P.W2.size(1)):
        t = P.encode_two_side(1, s)
        f, phi, x1 = E.cell1_keys[t.morphisms[(1, 0)]]
        u = P.phi(t)
        assert B.ver_keys[u.verticals[(1, 0)]] == (F.source.src1[f], phi)
        assert B.hor_keys[u.horizontals[(1, 0)]] == (f, x1)
        assert B.obj_keys[u.objects[(1, 0)]][1] == F.push_object(f, x1)


def test_verification_notices_a_wrong_map():
    class Shifted(BarPair):
        def decode_double_side(self, u):
            s = super().decode_double_side(u)
            return (s + 1) % self.Wd.size(u.p) if u.p == 1 else s

    F = fixture("walking_two_cell")
    rep = verify_thomason_iso(F, 2, Shifted(F, 2))
    assert not rep["ok"]
    assert rep["checks"]["phi_simplicial"]["violations"]
    assert rep["checks"]["theta_after_phi"]["violations"]


# -- negative controls ---------------------------------------------------------

def test_naive_phi_row_fails_with_alpha_against_identity():
    r = naive_phi_row(bar_pair("walking_two_cell", 2))
    assert r["fails"]
    assert r["failing_operators"] == ["d_1@1"]
    assert (r["lhs"], r["rhs"]) == ("alpha_x'@c", "id_x@c")


def test_naive_phi_diagonal_fails_on_objects():
    r = naive_phi_diagonal(bar_pair("walking_two_cell", 2))
    assert r["fails"]
    assert (r["lhs"], r["rhs"]) == ("(c,Ff(x'))", "(c,x)")


def test_naive_theta_choice_one_fails_at_d0():
    r = naive_theta_column(bar_pair("walking_two_cell", 2), 1)
    assert r["fails"] and r["operator"] == "d_0^v"
    assert (r["lhs"], r["rhs"]) == ("(c,x)", "(c,Ff(x'))")


def test_naive_theta_choice_two_fails():
    r = naive_theta_column(bar_pair("walking_two_cell", 2), 2)
    assert r["fails"]
    # the source is sent to the target, so only the face picking the source can break
    assert r["operator"] == "d_1^v"


def test_diagonal_theta_has_no_image_for_a_pasted_pair():
    P = bar_pair("composable", 2)
    r = diagonal_theta(P)
    assert r["fails"] and r["degree_one_commutes"]
    assert (r["two_simplices"], r["without_image"]) == (388, 36)
    assert r["witness"] == "[alpha|00<11@c'] over [id_f'|id_11@c'] | [beta|phi@c''] over [id_g'|id_y''@c'']"
    # the missing piece: no morphism Fg'(y'') → Fg(y'') in F(c')
    F, C = P.F, P.C
    cp, cpp = C.obj_labels.index("c'"), C.obj_labels.index("c''")
    g, gp = C.cell1_labels.index("g"), C.cell1_labels.index("g'")
    y = F.category(cpp).obj_labels.index("y''")
    Fc = F.category(cp)
    a, b = F.push_object(gp, y), F.push_object(g, y)
    assert (Fc.obj_label(a), Fc.obj_label(b)) == ("11", "10")
    assert not any(Fc.src[m] == a and Fc.tgt[m] == b for m in Fc.morphisms)


def test_diagonal_theta_needs_degree_two():
    with pytest.raises(ValueError):
        diagonal_theta(bar_pair("walking_two_cell", 1))


def test_all_controls_fail_together():
    out = run_negative_controls(bar_pair("walking_two_cell", 2), bar_pair("composable", 2))
    assert len(out) == 5 and all(r["fails"] for r in out)
