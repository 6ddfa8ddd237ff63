"""Regression expectations stored in a fixture's ``expected`` block.

Every entry carries a ``basis`` string naming where the value comes from:
``trivial``, ``example`` (the fixture reproduces a worked example) or
``derived: ...`` (an independent hand computation).
"""

from __future__ import annotations

from ..category_core import TwoFunctorToCat


def _outcome(what: str, expected, actual, basis: str) -> dict:
    return {"expectation": what, "expected": expected, "actual": actual, "basis": basis,
            "ok": expected == actual}


def count_values(F: TwoFunctorToCat, E, B) -> dict:
    """Counts an ``expected.counts`` block may refer to."""
    return {"elements_objects": len(E.objects), "elements_one_cells": len(E.one_cells),
            "elements_two_cells": len(E.two_cells), "double_objects": len(B.objects),
            "horizontals": len(B.horizontals), "verticals": len(B.verticals),
            "squares": len(B.squares)}


def squares_with_identity_right_edge(F: TwoFunctorToCat, B, two_cell: str) -> int:
    C = F.source
    labels = {C.label2(a): a for a in C.two_cells}
    if two_cell not in labels:
        raise KeyError(f"no 2-cell named {two_cell!r}")
    a = labels[two_cell]
    cat = F.category(C.tgt_obj(a))
    return sum(1 for s in B.squares
               if B.sq_keys[s][0] == a and cat.is_identity(B.sq_keys[s][1]))


def check_counts(F: TwoFunctorToCat, E, B, expected: dict) -> list[dict]:
    values = count_values(F, E, B)
    out = []
    for key, spec in sorted(expected.get("counts", {}).items()):
        if key == "squares_with_identity_right_edge":
            actual = squares_with_identity_right_edge(F, B, spec["two_cell"])
            key = f"{key}[{spec['two_cell']}]"
        elif key in values:
            actual = values[key]
        else:
            out.append({"expectation": key, "ok": False, "basis": spec.get("basis", ""),
                        "expected": spec.get("value"), "actual": None, "error": "unknown count"})
            continue
        out.append(_outcome(key, spec["value"], actual, spec.get("basis", "")))
    return out


def check_homology(tables: dict, expected: dict) -> list[dict]:
    """Compare every model's homology with ``expected.homology`` in the degrees both cover."""
    spec = expected.get("homology")
    if not spec:
        return []
    out = []
    for name, groups in tables.items():
        k = min(len(spec["betti"]), len(groups))
        want = {"betti": spec["betti"][:k], "torsion": [list(t) for t in spec.get("torsion", [[]] * k)][:k]}
        got = {"betti": [g["betti"] for g in groups[:k]], "torsion": [g["torsion"] for g in groups[:k]]}
        out.append(_outcome(f"homology of {name} in degrees 0..{k - 1}", want, got, spec.get("basis", "")))
    return out
