"""Command-line entry point ``catelements``.

Every command prints a deterministic JSON report (sorted keys, no timings)
and exits 0 exactly when the report has no violations or mismatches.
Input errors exit 2, the memory guard exits 3.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bar import bar_construction, bar_count_report
from .category_core import (validate_category, validate_double_category, validate_two_category,
                            validate_two_functor)
from .elements import double_category_of_elements, two_category_of_elements
from .errors import CatElementsError, InputValidationError, RangeError, ResourceLimitError
from .hocolim import hocolim_simplicial_category
from .homology import compare_models, homology
from .io import (category_from_doc, check_schema, double_category_from_doc, double_category_to_doc,
                 dumps, read_json, two_category_from_doc, two_category_to_doc, two_functor_from_doc)
from .io.expectations import check_counts, check_homology
from .nerves import (bisimplicial_from_simplicial_category, nerve_category, nerve_double_category,
                     nerve_two_category, validate_simplicial_category)
from .simplicial import (DEFAULT_MAX_DIM, bisimplicial_from_doc, bisimplicial_to_doc, diagonal,
                         simplicial_from_doc, simplicial_to_doc, validate_bisimplicial,
                         validate_simplicial)
from .thomason_iso import REPORT_VERSION, BarPair, run_negative_controls, verify_thomason_iso

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3


def _base(command: str, **extra) -> dict:
    return {"report_version": REPORT_VERSION, "command": command, **extra}


def _load_functor(path: str):
    """Schema-checked 2-functor plus its raw document; axioms are checked by the caller."""
    doc = read_json(path)
    check_schema(doc, "twofunctor")
    F = two_functor_from_doc(doc)
    reports = [validate_two_category(F.source), validate_two_functor(F)]
    bad = [r for r in reports if not r.ok]
    if bad:
        raise InputValidationError(f"{path}: input fails its axioms\n{bad[0]}", report=bad[0])
    return F, doc


def _kind(doc) -> str:
    kind = doc.get("kind") if isinstance(doc, dict) else None
    if kind in ("simplicial", "bisimplicial"):
        return "sset"
    if kind not in ("category", "twocat", "twofunctor", "doublecat"):
        raise InputValidationError(f"cannot tell the document kind from 'kind': {kind!r}")
    return kind


def cmd_validate(args) -> tuple[dict, bool]:
    doc = read_json(args.input)
    kind = _kind(doc)
    check_schema(doc, kind)
    if kind == "category":
        reports = [validate_category(category_from_doc(doc))]
    elif kind == "twocat":
        reports = [validate_two_category(two_category_from_doc(doc))]
    elif kind == "twofunctor":
        F = two_functor_from_doc(doc)
        reports = [validate_two_category(F.source), validate_two_functor(F)]
    elif kind == "doublecat":
        reports = [validate_double_category(double_category_from_doc(doc))]
    elif doc["kind"] == "simplicial":
        reports = [validate_simplicial(simplicial_from_doc(doc))]
    else:
        reports = [validate_bisimplicial(bisimplicial_from_doc(doc))]
    ok = all(r.ok for r in reports)
    return _base("validate", kind=doc["kind"], reports=[r.to_dict() for r in reports], ok=ok), ok


def _pairs(F) -> dict:
    """Which ``(c, x)`` each object label of an elements construction stands for."""
    C = F.source
    out = {}
    for c in C.objects:
        for x in F.category(c).objects:
            key = (C.obj_label(c), F.category(c).obj_label(x))
            out[f"({key[0]},{key[1]})"] = list(key)
    return {"objects": out}


def cmd_elements(args) -> tuple[dict, bool]:
    F, doc = _load_functor(args.input)
    E, B = two_category_of_elements(F), double_category_of_elements(F)
    reports = [validate_two_category(E), validate_double_category(B)]
    expectations = check_counts(F, E, B, doc.get("expected", {}))
    ok = all(r.ok for r in reports) and all(e["ok"] for e in expectations)
    report = _base("elements", functor=F.name, mode=args.mode,
                   two_category={"objects": len(E.objects), "one_cells": len(E.one_cells),
                                 "two_cells": len(E.two_cells)},
                   double_category={"objects": len(B.objects), "horizontals": len(B.horizontals),
                                    "verticals": len(B.verticals), "squares": len(B.squares)},
                   reports=[r.to_dict() for r in reports], expectations=expectations, ok=ok)
    if args.out:
        pairs = _pairs(F)
        docs = {"2cat": lambda: two_category_to_doc(E, pairs), "double": lambda: double_category_to_doc(B, pairs)}
        if args.mode == "both":
            _write(args.out, {"two_category": docs["2cat"](), "double_category": docs["double"]()})
        else:
            _write(args.out, docs[args.mode]())
    return report, ok


_NERVE_KINDS = {"category": "cat", "twocat": "2cat", "doublecat": "double", "twofunctor": "2cat"}


def _nerve_of(doc: dict, path: str, kind: str | None, D: int):
    """The nerve requested by ``--kind``; a 2-functor input means its elements construction."""
    doc_kind = _kind(doc)
    check_schema(doc, doc_kind)
    if doc_kind not in _NERVE_KINDS:
        raise InputValidationError("nerve takes a category, 2-category, double category or 2-functor")
    kind = kind or _NERVE_KINDS[doc_kind]
    if doc_kind == "twofunctor":
        if kind == "cat":
            raise InputValidationError("a 2-functor has a 2-category or a double category of elements; "
                                       "use --kind 2cat or --kind double")
        F, _ = _load_functor(path)
        if kind == "2cat":
            return nerve_two_category(two_category_of_elements(F), D), doc_kind, kind
        return nerve_double_category(double_category_of_elements(F), D), doc_kind, kind
    if kind != _NERVE_KINDS[doc_kind]:
        raise InputValidationError(f"--kind {kind} does not match a {doc_kind} document")
    if kind == "cat":
        return nerve_category(category_from_doc(doc), D), doc_kind, kind
    if kind == "2cat":
        return nerve_two_category(two_category_from_doc(doc), D), doc_kind, kind
    return nerve_double_category(double_category_from_doc(doc), D), doc_kind, kind


def cmd_nerve(args) -> tuple[dict, bool]:
    D = args.max_dim
    X, doc_kind, kind = _nerve_of(read_json(args.input), args.input, args.kind, D)
    if kind == "cat":
        rep = validate_simplicial(X)
        if args.out:
            _write(args.out, simplicial_to_doc(X))
        return _base("nerve", input_kind=doc_kind, kind=kind, max_dim=D, sizes=X.sizes(),
                     nondegenerate=X.nondegenerate_counts(), report=rep.to_dict(), ok=rep.ok), rep.ok
    rep = validate_bisimplicial(X)
    diag = diagonal(X)
    if args.out:
        _write(args.out, bisimplicial_to_doc(X))
    report = _base("nerve", input_kind=doc_kind, kind=kind, max_dim=D, sizes=X.sizes(),
                   diagonal_sizes=diag.sizes(), diagonal_nondegenerate=diag.nondegenerate_counts(),
                   report=rep.to_dict(), ok=rep.ok)
    return report, rep.ok


def cmd_hocolim(args) -> tuple[dict, bool]:
    F, _ = _load_functor(args.input)
    D = args.max_dim
    S = hocolim_simplicial_category(F, D)
    Y = bisimplicial_from_simplicial_category(S, name=f"N hocolim{F.name}")
    reports = [validate_simplicial_category(S), validate_bisimplicial(Y)]
    diag = diagonal(Y)
    ok = all(r.ok for r in reports)
    if args.out:
        _write(args.out, bisimplicial_to_doc(Y) if args.emit == "bisimplicial" else simplicial_to_doc(diag))
    return _base("hocolim", functor=F.name, max_dim=D,
                 level_objects=[c.n_objects for c in S.cats],
                 level_morphisms=[c.n_morphisms for c in S.cats],
                 diagonal_sizes=diag.sizes(), diagonal_nondegenerate=diag.nondegenerate_counts(),
                 reports=[r.to_dict() for r in reports], ok=ok), ok


def cmd_bar(args) -> tuple[dict, bool]:
    doc = read_json(args.input)
    D = args.max_dim
    if isinstance(doc, dict) and doc.get("kind") == "bisimplicial":
        check_schema(doc, "sset")
        X = bisimplicial_from_doc(doc)
        D = min(D, X.max_dim)
        source, kind = doc.get("name", ""), "bisimplicial"
        reports = [validate_bisimplicial(X)]
    else:
        X, _, kind = _nerve_of(doc, args.input, args.kind, D)
        if kind == "cat":
            raise InputValidationError("the bar construction needs a bisimplicial set")
        source = doc.get("name", "")
        reports = []
    W = bar_construction(X, D)
    reports.append(validate_simplicial(W))
    ok = all(r.ok for r in reports)
    if args.out:
        _write(args.out, simplicial_to_doc(W))
    return _base("bar", source=source, kind=kind, max_dim=D, levels=bar_count_report(W),
                 reports=[r.to_dict() for r in reports], ok=ok), ok


def cmd_iso_verify(args) -> tuple[dict, bool]:
    F, _ = _load_functor(args.input)
    D = args.max_dim
    P = BarPair(F, D)
    if not args.negative_control:
        report = verify_thomason_iso(F, D, P)
        return report, report["ok"]
    other = None
    if args.diagonal_input:
        G, _ = _load_functor(args.diagonal_input)
        other = BarPair(G, max(D, 2))
    if D < 2 and other is None:
        raise InputValidationError("--negative-control needs --max-dim >= 2 for the diagonal control")
    controls = run_negative_controls(P, other)
    # The naive maps are supposed to break; a control that holds is the surprise.
    fired = all(c["fails"] for c in controls)
    report = _base("iso-verify", functor=F.name, max_dim=D, negative_control=True,
                   controls=controls, all_controls_fail=fired, ok=False)
    return report, False


def cmd_homology(args) -> tuple[dict, bool]:
    doc = read_json(args.input)
    check_schema(doc, "sset")
    S = simplicial_from_doc(doc) if doc["kind"] == "simplicial" else diagonal(bisimplicial_from_doc(doc))
    rep = validate_simplicial(S)
    if not rep.ok:
        return _base("homology", report=rep.to_dict(), ok=False), False
    H = homology(S, args.up_to, name=doc.get("name", ""))
    return _base("homology", input_kind=doc["kind"], max_dim=S.max_dim, **H.to_dict(), ok=True), True


def cmd_compare(args) -> tuple[dict, bool]:
    F, doc = _load_functor(args.input)
    report = compare_models(F, args.max_dim)
    expectations = check_homology({k: v["homology"] for k, v in report["models"].items()},
                                  doc.get("expected", {}))
    report["expectations"] = expectations
    report["ok"] = report["agree"] and all(e["ok"] for e in expectations)
    if args.out:
        _write(args.out, report)
    return report, report["ok"]


def _write(path: str, doc) -> None:
    Path(path).write_text(dumps(doc), encoding="utf-8")


def _max_dim(text: str) -> int:
    try:
        D = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if D < 0:
        raise argparse.ArgumentTypeError("--max-dim must be >= 0")
    return D


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catelements",
        description="Categories of elements of 2-functors, their nerves, and the bar-construction isomorphism.")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, func, help_text, max_dim=True, out=True):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--in", dest="input", required=True, help="input JSON document")
        if max_dim:
            p.add_argument("--max-dim", type=_max_dim, default=DEFAULT_MAX_DIM,
                           help=f"truncation degree (default {DEFAULT_MAX_DIM})")
        if out:
            p.add_argument("--out", help="also write the constructed object or report here")
        p.set_defaults(func=func)
        return p

    kind_help = ("cat, 2cat or double; for a 2-functor input, 2cat means its 2-category of elements "
                 "and double its double category of elements (default: from the document)")
    command("validate", cmd_validate, "check a document against its schema and axioms", max_dim=False, out=False)
    p = command("elements", cmd_elements, "build the 2-category and double category of elements", max_dim=False)
    p.add_argument("--mode", choices=("2cat", "double", "both"), default="both",
                   help="which construction --out writes (default both)")
    p = command("nerve", cmd_nerve, "nerve of a category, 2-category, double category or of F's elements")
    p.add_argument("--kind", choices=("cat", "2cat", "double"), help=kind_help)
    p = command("hocolim", cmd_hocolim, "homotopy colimit of F as a simplicial category")
    p.add_argument("--emit", choices=("bisimplicial", "diagonal"), default="bisimplicial",
                   help="what --out writes (default bisimplicial)")
    p = command("bar", cmd_bar, "bar construction of a bisimplicial set or of a nerve of F's elements")
    p.add_argument("--kind", choices=("2cat", "double"), help=kind_help)
    p = command("iso-verify", cmd_iso_verify, "check that the bar constructions are isomorphic", out=False)
    p.add_argument("--negative-control", action="store_true",
                   help="run the naive comparison maps instead; they are expected to fail")
    p.add_argument("--diagonal-input",
                   help="2-functor for the diagonal control (default: the --in functor)")
    p.add_argument("--report", help="also write the report here")
    p = command("homology", cmd_homology, "integer homology of a simplicial set document",
                max_dim=False, out=False)
    p.add_argument("--up-to", type=int, default=None, help="highest degree (default max_dim - 1)")
    command("compare", cmd_compare, "homology of all five models of the classifying space")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report, ok = args.func(args)
    except ResourceLimitError as exc:
        print(dumps(_base(args.command, error="resource", message=str(exc), ok=False)), end="")
        return EXIT_RESOURCE
    except (CatElementsError, FileNotFoundError, KeyError) as exc:
        kind = "range" if isinstance(exc, RangeError) else "input"
        payload = _base(args.command, error=kind, message=str(exc), ok=False)
        if isinstance(exc, InputValidationError) and exc.schema_path:
            payload["schema_path"] = exc.schema_path
        print(dumps(payload), end="")
        return EXIT_INPUT
    text = dumps(report)
    if getattr(args, "report", None):
        Path(args.report).write_text(text, encoding="utf-8")
    sys.stdout.write(text)
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
