from __future__ import annotations

import json
import subprocess
import sys

import pytest

from catelements import fixture_path
from catelements.cli import main
from catelements.io import category_from_doc, category_to_doc, dumps, read_json
from helpers import ALL_FIXTURES


def run(capsys, *argv) -> tuple[int, dict]:
    code = main([str(a) for a in argv])
    return code, json.loads(capsys.readouterr().out)


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_commands_succeed_on_fixtures(capsys, tmp_path, name):
    path = fixture_path(name)
    D = 3
    assert run(capsys, "validate", "--in", path)[0] == 0
    code, rep = run(capsys, "elements", "--in", path, "--out", tmp_path / "el.json")
    assert code == 0 and all(e["ok"] for e in rep["expectations"])
    for kind in ("2cat", "double"):
        code, _ = run(capsys, "nerve", "--in", path, "--kind", kind, "--max-dim", D,
                      "--out", tmp_path / f"n{kind}.json")
        assert code == 0
        assert run(capsys, "validate", "--in", tmp_path / f"n{kind}.json")[0] == 0
        assert run(capsys, "bar", "--in", path, "--kind", kind, "--max-dim", D)[0] == 0
    assert run(capsys, "hocolim", "--in", path, "--max-dim", D)[0] == 0
    assert run(capsys, "iso-verify", "--in", path, "--max-dim", D)[0] == 0
    code, rep = run(capsys, "compare", "--in", path, "--max-dim", D)
    assert code == 0 and rep["agree"]


def test_elements_modes_write_the_requested_documents(capsys, tmp_path):
    path = fixture_path("walking_two_cell")
    for mode, kinds in (("2cat", {"twocat"}), ("double", {"doublecat"})):
        out = tmp_path / f"{mode}.json"
        assert run(capsys, "elements", "--in", path, "--mode", mode, "--out", out)[0] == 0
        doc = read_json(out)
        assert doc["kind"] in kinds
        assert run(capsys, "validate", "--in", out)[0] == 0
    out = tmp_path / "both.json"
    run(capsys, "elements", "--in", path, "--out", out)
    assert set(read_json(out)) == {"two_category", "double_category"}


def test_hocolim_emits_bisimplicial_or_diagonal(capsys, tmp_path):
    path = fixture_path("walking_two_cell")
    for emit in ("bisimplicial", "diagonal"):
        out = tmp_path / f"{emit}.json"
        code, rep = run(capsys, "hocolim", "--in", path, "--max-dim", 3, "--emit", emit, "--out", out)
        assert code == 0 and rep["diagonal_sizes"] == [4, 10, 19, 31]
        assert read_json(out)["kind"] == ("bisimplicial" if emit == "bisimplicial" else "simplicial")
        code, H = run(capsys, "homology", "--in", out)
        assert code == 0 and H["groups"][0]["betti"] == 1


def test_bar_of_a_bisimplicial_document(capsys, tmp_path):
    path = fixture_path("walking_two_cell")
    out = tmp_path / "x.json"
    run(capsys, "nerve", "--in", path, "--kind", "double", "--max-dim", 3, "--out", out)
    code, rep = run(capsys, "bar", "--in", out, "--max-dim", 3)
    assert code == 0 and [lv["size"] for lv in rep["levels"]] == [4, 12, 27, 51]


def test_homology_range_error(capsys, tmp_path):
    out = tmp_path / "n.json"
    run(capsys, "nerve", "--in", fixture_path("walking_two_cell"), "--max-dim", 3, "--out", out)
    code, rep = run(capsys, "homology", "--in", out, "--up-to", 3)
    assert code == 2 and rep["error"] == "range"
    assert run(capsys, "homology", "--in", out, "--up-to", 2)[0] == 0


def test_category_document_nerve(capsys, tmp_path):
    from helpers import fixture
    doc = category_to_doc(fixture("parallel_pair").source.underlying_category())
    assert category_from_doc(doc).n_morphisms == 4
    path = tmp_path / "cat.json"
    path.write_text(dumps(doc))
    code, rep = run(capsys, "nerve", "--in", path, "--max-dim", 3)
    assert code == 0 and rep["nondegenerate"] == [2, 2, 0, 0]
    assert run(capsys, "nerve", "--in", path, "--kind", "double")[0] == 2


def test_reports_are_deterministic(capsys):
    args = ("compare", "--in", fixture_path("walking_two_cell"), "--max-dim", 3)
    main([str(a) for a in args])
    first = capsys.readouterr().out
    main([str(a) for a in args])
    assert capsys.readouterr().out == first


def test_schema_error_reports_the_path(capsys, tmp_path):
    doc = read_json(fixture_path("walking_two_cell"))
    doc["categories"]["c"]["objects"] = "not a list"
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, rep = run(capsys, "validate", "--in", path)
    assert code == 2 and rep["error"] == "input" and rep["schema_path"]


def test_axiom_failure_is_an_input_error(capsys, tmp_path):
    doc = read_json(fixture_path("walking_two_cell"))
    # alpha_{x'} must run from Ff(x') to Fg(x'); psi starts at x instead
    doc["transformations"]["alpha"]["x'"] = "psi"
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, rep = run(capsys, "iso-verify", "--in", path, "--max-dim", 2)
    assert code == 2


def test_missing_file_and_unknown_kind(capsys, tmp_path):
    assert run(capsys, "validate", "--in", tmp_path / "nope.json")[0] == 2
    path = tmp_path / "k.json"
    path.write_text(json.dumps({"kind": "mystery"}))
    assert run(capsys, "validate", "--in", path)[0] == 2


def test_negative_max_dim_is_rejected():
    with pytest.raises(SystemExit) as exc:
        main(["nerve", "--in", str(fixture_path("point")), "--max-dim", "-1"])
    assert exc.value.code == 2


def test_negative_control_exits_one_with_witnesses(capsys, tmp_path):
    report = tmp_path / "r.json"
    code, rep = run(capsys, "iso-verify", "--in", fixture_path("walking_two_cell"), "--max-dim", 2,
                    "--negative-control", "--diagonal-input", fixture_path("composable"), "--report", report)
    assert code == 1 and rep["all_controls_fail"]
    assert all(c["witness"] for c in rep["controls"])
    assert read_json(report) == rep


def test_negative_control_needs_degree_two(capsys):
    code, _ = run(capsys, "iso-verify", "--in", fixture_path("point"), "--max-dim", 1, "--negative-control")
    assert code == 2


def test_failed_expectation_gives_nonzero_exit(capsys, tmp_path):
    doc = read_json(fixture_path("walking_two_cell"))
    doc["expected"]["counts"]["elements_objects"]["value"] += 1
    doc["expected"]["homology"]["betti"] = [2, 0, 0]
    path = tmp_path / "wrong.json"
    path.write_text(json.dumps(doc))
    code, rep = run(capsys, "elements", "--in", path)
    assert code == 1 and not all(e["ok"] for e in rep["expectations"])
    code, rep = run(capsys, "compare", "--in", path, "--max-dim", 3)
    assert code == 1 and rep["agree"] and not rep["ok"]


def test_resource_guard_exits_three(capsys, monkeypatch):
    import catelements.simplicial as simplicial
    monkeypatch.setattr(simplicial, "MAX_LEVEL_SIZE", 10)
    code, rep = run(capsys, "bar", "--in", fixture_path("composable"), "--max-dim", 3)
    assert code == 3 and rep["error"] == "resource"


def test_console_script_runs():
    out = subprocess.run([sys.executable, "-m", "catelements.cli", "validate", "--in",
                          str(fixture_path("point"))], capture_output=True, text=True, check=False)
    assert out.returncode == 0 and json.loads(out.stdout)["ok"]
