"""Acceptance criteria, each reported as one PASS/FAIL line at the end of the run."""

from __future__ import annotations

import json
import subprocess
import sys
import time
from functools import lru_cache

import pytest

from catelements import fixture_path
from catelements.category_core import validate_double_category, validate_two_category
from catelements.hocolim import hocolim_simplicial_category
from catelements.homology import MODEL_NAMES
from catelements.io.expectations import squares_with_identity_right_edge
from catelements.nerves import bisimplicial_from_simplicial_category, validate_simplicial_category
from catelements.simplicial import diagonal, validate_bisimplicial, validate_simplicial
from catelements.thomason_iso.negative import diagonal_theta, naive_phi_row, naive_theta_column
from helpers import ALL_FIXTURES, bar_pair, fixture
from test_mutations import detection_rate

D = 4
RESULTS: dict[str, str] = {}


def record(criterion: str, ok: bool, detail: str) -> None:
    RESULTS[criterion] = f"{'PASS' if ok else 'FAIL'}  {detail}"


def cli(*argv) -> tuple[int, dict, float]:
    start = time.perf_counter()
    out = subprocess.run([sys.executable, "-m", "catelements.cli", *map(str, argv)],
                         capture_output=True, text=True, check=False)
    return out.returncode, json.loads(out.stdout), time.perf_counter() - start


@lru_cache(maxsize=None)
def iso_run(name: str) -> tuple[int, dict, float]:
    return cli("iso-verify", "--in", fixture_path(name), "--max-dim", D)


def test_criterion_1_iso_verify_exits_zero_on_every_fixture():
    assert len(ALL_FIXTURES) >= 6
    rows = {name: iso_run(name) for name in ALL_FIXTURES}
    ok = all(code == 0 and rep["ok"] and secs < 10 for code, rep, secs in rows.values())
    slowest = max(secs for _, _, secs in rows.values())
    record("1 isomorphism check", ok, f"{len(rows)} fixtures at --max-dim {D}, slowest {slowest:.1f} s")
    for name, (code, rep, secs) in rows.items():
        assert code == 0 and rep["ok"], name
        assert secs < 10, (name, secs)
        checks = rep["checks"]
        for key in ("bijection", "theta_after_phi", "phi_after_theta", "phi_simplicial", "theta_simplicial"):
            assert checks[key]["checked"] > 0 and not checks[key]["violations"], (name, key)


def test_criterion_2_negative_controls_fail_with_witnesses():
    P = bar_pair("walking_two_cell", 2)
    row = naive_phi_row(P)
    choice1 = naive_theta_column(P, 1)
    choice2 = naive_theta_column(P, 2)
    diag = diagonal_theta(bar_pair("composable", 2))
    # The (1,1) → (0,1) face is stored as d_1^h here; it is often quoted as d_1^v.
    ok = (row["fails"] and (row["lhs"], row["rhs"]) == ("alpha_x'@c", "id_x@c")
          and choice1["fails"] and choice1["operator"] == "d_0^v"
          and (choice1["lhs"], choice1["rhs"]) == ("(c,x)", "(c,Ff(x'))")
          and choice2["fails"]
          and diag["fails"] and diag["degree_one_commutes"] and diag["displayed_shape_witnesses"] > 0)
    record("2 negative controls", ok,
           f"Φ at (1,1): {row['lhs']} vs {row['rhs']}; Θ_01 choice 1 at {choice1['operator']}, "
           f"choice 2 at {choice2['operator']}; diagonal Θ witness {diag['witness']}")
    assert ok


@pytest.mark.xfail(strict=True, reason="the second naive Θ_01 choice breaks at d_1^v; "
                                       "no single convention puts both choices at d_0^v")
def test_criterion_2b_both_theta_choices_fail_at_d0v():
    P = bar_pair("walking_two_cell", 2)
    ops = [naive_theta_column(P, c)["operator"] for c in (1, 2)]
    ok = ops == ["d_0^v", "d_0^v"]
    if ok:
        record("2b both Θ_01 choices at d_0^v", True, str(ops))
    else:
        RESULTS["2b both Θ_01 choices at d_0^v"] = f"FAIL (unattainable, see ledger)  operators {ops}"
    assert ok


def test_criterion_3_structural_counts():
    P = bar_pair("walking_two_cell", 2)
    F, E, B, C = P.F, P.E, P.B, P.C
    one_alpha = squares_with_identity_right_edge(F, B, "alpha")
    # brute force: a square is a 2-cell α: f ⇒ g together with a vertical morphism in F(tgt α)
    oracle = sum(F.category(C.tgt_obj(a)).n_morphisms for a in C.two_cells)
    counts = (len(E.objects), len(B.objects), one_alpha, len(B.squares))
    ok = counts == (4, 4, 1, oracle) and oracle == 10
    record("3 structural counts", ok,
           f"∫F objects {counts[0]}, ∬F objects {counts[1]}, α squares with identity right edge "
           f"{counts[2]}, squares {counts[3]} (oracle {oracle})")
    assert ok


@lru_cache(maxsize=None)
def compare_run(name: str) -> tuple[int, dict, float]:
    return cli("compare", "--in", fixture_path(name), "--max-dim", D)


def test_criterion_4_homology_agrees_across_models():
    reports = {name: compare_run(name)[1] for name in ALL_FIXTURES}
    agree = all(rep["agree"] and rep["trusted_up_to"] == 3 and set(rep["models"]) == set(MODEL_NAMES)
                for rep in reports.values())
    circle = reports["parallel_pair"]["models"][MODEL_NAMES[0]]["display"]
    point = reports["point"]["models"][MODEL_NAMES[0]]["display"]
    ok = agree and circle[:3] == ["Z", "Z", "0"] and point == ["Z", "0", "0", "0"]
    record("4 homology agreement", ok,
           f"{len(reports)} fixtures, 5 models, H_0..H_3; parallel pair {circle}, point {point}")
    assert ok


def _pipeline_reports(name: str) -> list:
    P = bar_pair(name, D)
    S = hocolim_simplicial_category(P.F, D)
    Y = bisimplicial_from_simplicial_category(S)
    return [validate_two_category(P.E), validate_double_category(P.B),
            validate_bisimplicial(P.X2), validate_bisimplicial(P.Xd),
            validate_simplicial(P.W2), validate_simplicial(P.Wd),
            validate_simplicial(diagonal(P.X2)), validate_simplicial(diagonal(P.Xd)),
            validate_simplicial_category(S), validate_bisimplicial(Y), validate_simplicial(diagonal(Y))]


def test_criterion_5_validators_and_mutation_detection():
    reports = [r for name in ALL_FIXTURES for r in _pipeline_reports(name)]
    violations = sum(len(r.violations) for r in reports)
    kinds = ("category", "2-category", "double category", "simplicial", "bisimplicial")
    rates = {k: detection_rate(k)[:2] for k in kinds}
    caught = all(c == t and t >= 10 for c, t in rates.values())
    ok = violations == 0 and caught
    record("5 validators and mutants", ok,
           f"{len(reports)} structures at D={D} with {violations} violations; mutants caught "
           + ", ".join(f"{k} {c}/{t}" for k, (c, t) in rates.items()))
    assert ok


def test_criterion_6_redundancy_equations():
    names = ("redundancy_two_side", "redundancy_objects", "redundancy_verticals")
    checked = failed = 0
    for name in ALL_FIXTURES:
        checks = iso_run(name)[1]["checks"]
        checked += sum(checks[k]["checked"] for k in names)
        failed += sum(len(checks[k]["violations"]) for k in names)
    ok = checked > 0 and failed == 0
    record("6 redundancy equations", ok, f"{checked} recomputations, {failed} mismatches")
    assert ok


def test_criterion_7_compare_is_byte_identical():
    args = ("compare", "--in", fixture_path("walking_two_cell"), "--max-dim", D)
    runs = [subprocess.run([sys.executable, "-m", "catelements.cli", *map(str, args)],
                           capture_output=True, check=False).stdout for _ in range(2)]
    ok = runs[0] == runs[1] and len(runs[0]) > 0
    record("7 determinism", ok, f"two compare runs, {len(runs[0])} bytes each, identical: {runs[0] == runs[1]}")
    assert ok
