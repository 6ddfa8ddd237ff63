"""JSON documents for categories, 2-categories, 2-functors and double categories.

Hand-written inputs may omit anything forced by strictness: identity cells,
composites with identities, the images of identities and composites under
``F``, and (for ``thin``/``locally_thin`` inputs) every composite that is
determined by its boundary.  Explicit entries always win over filled ones,
so a deliberately inconsistent table is kept and reported by the validator.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path
from typing import Any

import jsonschema
from referencing import Registry, Resource

from ..category_core import (DoubleCategoryData, FiniteCategory, FiniteFunctor, FiniteNatTrans,
                             FiniteTwoCategory, TwoFunctorToCat, horizontal_nat_trans,
                             validate_double_category, validate_two_category,
                             validate_two_functor)
from ..errors import InputValidationError, StructuralError

SCHEMA_NAMES = ("category", "twocat", "twofunctor", "doublecat", "sset")


def load_schema(name: str) -> dict:
    text = resources.files("catelements.io").joinpath("schemas", f"{name}.schema.json").read_text()
    return json.loads(text)


def _registry() -> Registry:
    return Registry().with_resources(
        (f"{n}.schema.json", Resource.from_contents(load_schema(n))) for n in SCHEMA_NAMES)


def check_schema(doc: Any, name: str) -> None:
    """Raise :class:`InputValidationError` naming the failing schema path."""
    validator = jsonschema.Draft202012Validator(load_schema(name), registry=_registry())
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.absolute_path))
    if errors:
        err = errors[0]
        path = "/" + "/".join(str(p) for p in err.absolute_path)
        raise InputValidationError(f"{name} schema violation at {path}: {err.message}",
                                   schema_path=path)


def read_json(path: str | Path) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise InputValidationError(f"{path}: not valid JSON ({exc})") from exc


def _index(names, what: str) -> dict[str, int]:
    out: dict[str, int] = {}
    for n in names:
        if n in out:
            raise StructuralError(f"ID collision: {what} {n!r} declared twice", [n])
        out[n] = len(out)
    return out


def _lookup(table: dict[str, int], name: str, what: str) -> int:
    try:
        return table[name]
    except KeyError:
        raise StructuralError(f"unknown {what} {name!r}", [name]) from None


# -- categories --------------------------------------------------------------

def category_from_doc(doc: dict, name: str = "") -> FiniteCategory:
    objs = list(doc["objects"])
    oidx = _index(objs, "object")
    mors = [(m["id"], _lookup(oidx, m["src"], "object"), _lookup(oidx, m["tgt"], "object"))
            for m in doc.get("morphisms", [])]
    declared_ids = dict(doc.get("identities", {}))
    for o in objs:
        ident = declared_ids.get(o, f"id_{o}")
        if ident not in {m[0] for m in mors}:
            mors.append((ident, oidx[o], oidx[o]))
        declared_ids[o] = ident
    midx = _index([m[0] for m in mors], "morphism")
    src = [m[1] for m in mors]
    tgt = [m[2] for m in mors]
    identity = [_lookup(midx, declared_ids[o], "morphism") for o in objs]
    table: dict[tuple[int, int], int] = {}
    for g, f, gf in doc.get("compose", []):
        table[(_lookup(midx, g, "morphism"), _lookup(midx, f, "morphism"))] = _lookup(midx, gf, "morphism")
    thin = bool(doc.get("thin", False))
    by_ends: dict[tuple[int, int], list[int]] = {}
    for m in range(len(mors)):
        by_ends.setdefault((src[m], tgt[m]), []).append(m)
    for f in range(len(mors)):
        for g in range(len(mors)):
            if tgt[f] != src[g] or (g, f) in table:
                continue
            if f == identity[src[f]]:
                table[(g, f)] = g
            elif g == identity[tgt[f]]:
                table[(g, f)] = f
            elif thin:
                cands = by_ends.get((src[f], tgt[g]), [])
                if len(cands) == 1:
                    table[(g, f)] = cands[0]
    return FiniteCategory(objs, [m[0] for m in mors], src, tgt, identity, table,
                          name=doc.get("name", name))


def category_to_doc(cat: FiniteCategory) -> dict:
    return {
        "kind": "category",
        "name": cat.name,
        "objects": [cat.obj_label(a) for a in cat.objects],
        "morphisms": [{"id": cat.label(m), "src": cat.obj_label(cat.src[m]),
                       "tgt": cat.obj_label(cat.tgt[m])} for m in cat.morphisms],
        "identities": {cat.obj_label(a): cat.label(cat.identity[a]) for a in cat.objects},
        "compose": [[cat.label(g), cat.label(f), cat.label(gf)]
                    for (g, f), gf in sorted(cat.table.items())],
    }


# -- 2-categories ------------------------------------------------------------

def two_category_from_doc(doc: dict) -> FiniteTwoCategory:
    objs = list(doc["objects"])
    oidx = _index(objs, "object")
    cell1: list[tuple[str, int, int]] = []
    cell2_raw: list[tuple[str, str, str]] = []
    vcomp_raw: list[list[str]] = []
    id2_declared: dict[str, str] = {}
    for hom in doc["homs"]:
        a, b = _lookup(oidx, hom["src"], "object"), _lookup(oidx, hom["tgt"], "object")
        for f in hom.get("one_cells", []):
            cell1.append((f, a, b))
        for t in hom.get("two_cells", []):
            cell2_raw.append((t["id"], t["src"], t["tgt"]))
        vcomp_raw.extend(hom.get("vcomp", []))
        id2_declared.update(hom.get("id2", {}))
    id1_declared = dict(doc.get("identities", {}))
    names1 = {c[0] for c in cell1}
    for o in objs:
        ident = id1_declared.setdefault(o, f"id_{o}")
        if ident not in names1:
            cell1.append((ident, oidx[o], oidx[o]))
            names1.add(ident)
    idx1 = _index([c[0] for c in cell1], "1-cell")
    identity1 = [idx1[id1_declared[o]] for o in objs]

    names2 = {c[0] for c in cell2_raw}
    for f, _, _ in cell1:
        ident = id2_declared.setdefault(f, f"id_{f}")
        if ident not in names2:
            cell2_raw.append((ident, f, f))
            names2.add(ident)
    idx2 = _index([c[0] for c in cell2_raw], "2-cell")
    cell2 = [(n, _lookup(idx1, s, "1-cell"), _lookup(idx1, t, "1-cell")) for n, s, t in cell2_raw]
    identity2 = [_lookup(idx2, id2_declared[f], "2-cell") for f, _, _ in cell1]

    src1 = [c[1] for c in cell1]
    tgt1 = [c[2] for c in cell1]
    src2 = [c[1] for c in cell2]
    tgt2 = [c[2] for c in cell2]

    comp1 = {}
    hc = doc.get("hcomp", {})
    for g, f, gf in hc.get("one_cells", []):
        comp1[(_lookup(idx1, g, "1-cell"), _lookup(idx1, f, "1-cell"))] = _lookup(idx1, gf, "1-cell")
    for f in range(len(cell1)):
        for g in range(len(cell1)):
            if tgt1[f] == src1[g] and (g, f) not in comp1:
                if f == identity1[src1[f]]:
                    comp1[(g, f)] = g
                elif g == identity1[tgt1[f]]:
                    comp1[(g, f)] = f

    vcomp = {}
    for be, al, r in vcomp_raw:
        vcomp[(_lookup(idx2, be, "2-cell"), _lookup(idx2, al, "2-cell"))] = _lookup(idx2, r, "2-cell")
    paste = {}
    for al, be, r in hc.get("two_cells", []):
        paste[(_lookup(idx2, al, "2-cell"), _lookup(idx2, be, "2-cell"))] = _lookup(idx2, r, "2-cell")

    thin = bool(doc.get("locally_thin", False))
    by_bounds: dict[tuple[int, int], list[int]] = {}
    for a in range(len(cell2)):
        by_bounds.setdefault((src2[a], tgt2[a]), []).append(a)

    def unique(s: int, t: int):
        cands = by_bounds.get((s, t), [])
        return cands[0] if thin and len(cands) == 1 else None

    for al in range(len(cell2)):
        for be in range(len(cell2)):
            if tgt2[al] != src2[be] or (be, al) in vcomp:
                continue
            if al == identity2[src2[al]]:
                vcomp[(be, al)] = be
            elif be == identity2[tgt2[al]]:
                vcomp[(be, al)] = al
            else:
                r = unique(src2[al], tgt2[be])
                if r is not None:
                    vcomp[(be, al)] = r

    def src_obj(a):
        return src1[src2[a]]

    def tgt_obj(a):
        return tgt1[src2[a]]

    for al in range(len(cell2)):
        for be in range(len(cell2)):
            if tgt_obj(al) != src_obj(be) or (al, be) in paste:
                continue
            if al == identity2[identity1[src_obj(al)]]:
                paste[(al, be)] = be
            elif be == identity2[identity1[tgt_obj(al)]]:
                paste[(al, be)] = al
            else:
                s = comp1.get((src2[be], src2[al]))
                t = comp1.get((tgt2[be], tgt2[al]))
                if s is None or t is None:
                    continue
                if al == identity2[src2[al]] and be == identity2[src2[be]]:
                    paste[(al, be)] = identity2[s]
                else:
                    r = unique(s, t)
                    if r is not None:
                        paste[(al, be)] = r

    return FiniteTwoCategory(objs, cell1, identity1, cell2, identity2, vcomp, comp1, paste,
                             name=doc.get("name", ""))


def two_category_to_doc(C: FiniteTwoCategory, pairs: dict | None = None) -> dict:
    homs: dict[tuple[int, int], dict] = {}
    for f in C.one_cells:
        h = homs.setdefault((C.src1[f], C.tgt1[f]), {
            "src": C.obj_label(C.src1[f]), "tgt": C.obj_label(C.tgt1[f]),
            "one_cells": [], "two_cells": [], "vcomp": [], "id2": {}})
        h["one_cells"].append(C.label1(f))
        h["id2"][C.label1(f)] = C.label2(C.identity2[f])
    for a in C.two_cells:
        f = C.src2[a]
        homs[(C.src1[f], C.tgt1[f])]["two_cells"].append(
            {"id": C.label2(a), "src": C.label1(f), "tgt": C.label1(C.tgt2[a])})
    for (be, al), r in sorted(C.vcomp.items()):
        f = C.src2[al]
        homs[(C.src1[f], C.tgt1[f])]["vcomp"].append([C.label2(be), C.label2(al), C.label2(r)])
    doc = {
        "kind": "twocat",
        "name": C.name,
        "objects": [C.obj_label(a) for a in C.objects],
        "identities": {C.obj_label(a): C.label1(C.identity1[a]) for a in C.objects},
        "homs": [homs[k] for k in sorted(homs)],
        "hcomp": {
            "one_cells": [[C.label1(g), C.label1(f), C.label1(r)] for (g, f), r in sorted(C.comp1.items())],
            "two_cells": [[C.label2(a), C.label2(b), C.label2(r)] for (a, b), r in sorted(C.paste.items())],
        },
    }
    if pairs is not None:
        doc["pairs"] = pairs
    return doc


# -- 2-functors --------------------------------------------------------------

def two_functor_from_doc(doc: dict) -> TwoFunctorToCat:
    C = two_category_from_doc(doc["twocat"])
    cat_docs = doc["categories"]
    cats = []
    for c in C.objects:
        label = C.obj_label(c)
        if label not in cat_docs:
            raise StructuralError(f"no category given for object {label!r}", [label])
        cats.append(category_from_doc(cat_docs[label], name=f"F({label})"))
    extra = set(cat_docs) - {C.obj_label(c) for c in C.objects}
    if extra:
        raise StructuralError(f"categories given for unknown objects {sorted(extra)}", sorted(extra))

    obj_idx = [{cat.obj_label(a): a for a in cat.objects} for cat in cats]
    mor_idx = [{cat.label(m): m for m in cat.morphisms} for cat in cats]
    lab1 = {C.label1(f): f for f in C.one_cells}
    lab2 = {C.label2(a): a for a in C.two_cells}

    functors: list[FiniteFunctor | None] = [None] * len(C.cell1_labels)
    for name, fdoc in doc.get("functors", {}).items():
        f = _lookup(lab1, name, "1-cell")
        src_cat, tgt_cat = cats[C.tgt1[f]], cats[C.src1[f]]
        s_obj, t_obj = obj_idx[C.tgt1[f]], obj_idx[C.src1[f]]
        s_mor, t_mor = mor_idx[C.tgt1[f]], mor_idx[C.src1[f]]
        omap = [-1] * src_cat.n_objects
        for a, b in fdoc.get("objects", {}).items():
            omap[_lookup(s_obj, a, "object")] = _lookup(t_obj, b, "object")
        if -1 in omap:
            missing = src_cat.obj_label(omap.index(-1))
            raise StructuralError(f"functor F({name}) has no image for object {missing!r}", [name, missing])
        mmap = [-1] * src_cat.n_morphisms
        for a, b in fdoc.get("morphisms", {}).items():
            mmap[_lookup(s_mor, a, "morphism")] = _lookup(t_mor, b, "morphism")
        for m in src_cat.morphisms:
            if mmap[m] != -1:
                continue
            s, t = omap[src_cat.src[m]], omap[src_cat.tgt[m]]
            if src_cat.is_identity(m):
                mmap[m] = tgt_cat.identity[s]
            else:
                cands = tgt_cat.hom(s, t)
                if len(cands) == 1:
                    mmap[m] = cands[0]
                else:
                    raise StructuralError(
                        f"functor F({name}) has no forced image for morphism {src_cat.label(m)!r}",
                        [name, src_cat.label(m)])
        functors[f] = FiniteFunctor(src_cat, tgt_cat, omap, mmap, name=f"F({name})")

    for c in C.objects:
        i = C.identity1[c]
        if functors[i] is None:
            functors[i] = FiniteFunctor.identity(cats[c])
    changed = True
    while changed:
        changed = False
        for (g, f), gf in C.comp1.items():
            if functors[gf] is None and functors[f] is not None and functors[g] is not None:
                # F(g∘f) = Ff∘Fg
                functors[gf] = functors[g].then(functors[f])
                changed = True
    for f in C.one_cells:
        if functors[f] is None:
            raise StructuralError(f"no functor given or forced for 1-cell {C.label1(f)!r}", [C.label1(f)])
        functors[f].name = f"F({C.label1(f)})"

    trans: list[FiniteNatTrans | None] = [None] * len(C.cell2_labels)
    for name, comps in doc.get("transformations", {}).items():
        al = _lookup(lab2, name, "2-cell")
        Ff, Fg = functors[C.src2[al]], functors[C.tgt2[al]]
        src_cat, tgt_cat = Ff.source, Ff.target
        s_obj, t_mor = obj_idx[C.tgt_obj(al)], mor_idx[C.src_obj(al)]
        cvec = [-1] * src_cat.n_objects
        for x, m in comps.items():
            cvec[_lookup(s_obj, x, "object")] = _lookup(t_mor, m, "morphism")
        for x in src_cat.objects:
            if cvec[x] == -1:
                cands = tgt_cat.hom(Ff.obj_map[x], Fg.obj_map[x])
                if len(cands) != 1:
                    raise StructuralError(
                        f"F({name}) is missing the component at {src_cat.obj_label(x)!r}",
                        [name, src_cat.obj_label(x)])
                cvec[x] = cands[0]
        trans[al] = FiniteNatTrans(Ff, Fg, cvec, name=f"F({name})")
    for f in C.one_cells:
        i = C.identity2[f]
        if trans[i] is None:
            trans[i] = FiniteNatTrans.identity(functors[f])
    changed = True
    while changed:
        changed = False
        for (be, al), r in C.vcomp.items():
            if trans[r] is None and trans[al] is not None and trans[be] is not None:
                trans[r] = trans[al].then(trans[be])
                changed = True
        for (al, be), r in C.paste.items():
            if trans[r] is None and trans[al] is not None and trans[be] is not None:
                partial = TwoFunctorToCat(C, cats, functors, trans)
                trans[r] = FiniteNatTrans(functors[C.src2[r]], functors[C.tgt2[r]],
                                          horizontal_nat_trans(partial, al, be))
                changed = True
    for al in C.two_cells:
        if trans[al] is None:
            Ff, Fg = functors[C.src2[al]], functors[C.tgt2[al]]
            cvec = []
            for x in Ff.source.objects:
                cands = Ff.target.hom(Ff.obj_map[x], Fg.obj_map[x])
                if len(cands) != 1:
                    raise StructuralError(f"no transformation given or forced for 2-cell {C.label2(al)!r}",
                                          [C.label2(al)])
                cvec.append(cands[0])
            trans[al] = FiniteNatTrans(Ff, Fg, cvec)
        trans[al].name = f"F({C.label2(al)})"
    return TwoFunctorToCat(C, cats, functors, trans, name=doc.get("name", ""))


def two_functor_to_doc(F: TwoFunctorToCat) -> dict:
    C = F.source
    return {
        "kind": "twofunctor",
        "name": F.name,
        "twocat": two_category_to_doc(C),
        "categories": {C.obj_label(c): {k: v for k, v in category_to_doc(F.category(c)).items()
                                        if k not in ("kind",)} for c in C.objects},
        "functors": {
            C.label1(f): {
                "objects": {F.functor(f).source.obj_label(a): F.functor(f).target.obj_label(b)
                            for a, b in enumerate(F.functor(f).obj_map)},
                "morphisms": {F.functor(f).source.label(a): F.functor(f).target.label(b)
                              for a, b in enumerate(F.functor(f).mor_map)},
            } for f in C.one_cells},
        "transformations": {
            C.label2(al): {F.transformation(al).source.source.obj_label(x):
                           F.transformation(al).source.target.label(m)
                           for x, m in enumerate(F.transformation(al).components)}
            for al in C.two_cells},
    }


def load_two_functor(path: str | Path, validate: bool = True) -> TwoFunctorToCat:
    """Parse, schema-check and (by default) axiom-check a 2-functor document."""
    doc = read_json(path)
    check_schema(doc, "twofunctor")
    F = two_functor_from_doc(doc)
    if validate:
        rep = validate_two_category(F.source)
        if not rep.ok:
            raise InputValidationError(f"{path}: source 2-category is invalid\n{rep}", report=rep)
        rep = validate_two_functor(F)
        if not rep.ok:
            raise InputValidationError(f"{path}: 2-functor is invalid\n{rep}", report=rep)
    return F


def load_two_category(path: str | Path, validate: bool = True) -> FiniteTwoCategory:
    doc = read_json(path)
    check_schema(doc, "twocat")
    C = two_category_from_doc(doc)
    if validate:
        rep = validate_two_category(C)
        if not rep.ok:
            raise InputValidationError(f"{path}: 2-category is invalid\n{rep}", report=rep)
    return C


def load_category(path: str | Path) -> FiniteCategory:
    doc = read_json(path)
    check_schema(doc, "category")
    return category_from_doc(doc)


# -- double categories -------------------------------------------------------

def double_category_from_doc(doc: dict) -> DoubleCategoryData:
    objs = list(doc["objects"])
    oidx = _index(objs, "object")

    def arrows(key):
        return [(a["id"], _lookup(oidx, a["src"], "object"), _lookup(oidx, a["tgt"], "object"))
                for a in doc.get(key, [])]

    hor, ver = arrows("horizontal"), arrows("vertical")
    hidx = _index([h[0] for h in hor], "horizontal morphism")
    vidx = _index([v[0] for v in ver], "vertical morphism")
    squares = [(s["id"], _lookup(hidx, s["top"], "horizontal morphism"),
                _lookup(hidx, s["bottom"], "horizontal morphism"),
                _lookup(vidx, s["left"], "vertical morphism"),
                _lookup(vidx, s["right"], "vertical morphism")) for s in doc["squares"]]
    sidx = _index([s[0] for s in squares], "square")

    def names(key, idx, what_from, what_to):
        given = doc.get(key, {})
        return [_lookup(idx, given[o], what_to) if o in given else -1 for o in what_from]

    def triples(key, idx, what):
        return {(_lookup(idx, a, what), _lookup(idx, b, what)): _lookup(idx, r, what)
                for a, b, r in doc.get(key, [])}

    return DoubleCategoryData(
        objs, hor, names("horizontal_identities", hidx, objs, "horizontal morphism"),
        triples("horizontal_compose", hidx, "horizontal morphism"),
        ver, names("vertical_identities", vidx, objs, "vertical morphism"),
        triples("vertical_compose", vidx, "vertical morphism"),
        squares, triples("square_hcomp", sidx, "square"), triples("square_vcomp", sidx, "square"),
        names("square_hor_identities", sidx, [v[0] for v in ver], "square"),
        names("square_ver_identities", sidx, [h[0] for h in hor], "square"),
        name=doc.get("name", ""),
    )


def double_category_to_doc(B: DoubleCategoryData, pairs: dict | None = None) -> dict:
    doc = {
        "kind": "doublecat",
        "name": B.name,
        "objects": [str(o) for o in B.obj_labels],
        "horizontal": [{"id": B.hlabel(h), "src": str(B.obj_labels[B.hsrc[h]]),
                        "tgt": str(B.obj_labels[B.htgt[h]])} for h in B.horizontals],
        "horizontal_identities": {str(B.obj_labels[o]): B.hlabel(B.hor_identity[o]) for o in B.objects},
        "horizontal_compose": [[B.hlabel(g), B.hlabel(f), B.hlabel(r)]
                               for (g, f), r in sorted(B.hor_comp.items())],
        "vertical": [{"id": B.vlabel(v), "src": str(B.obj_labels[B.vsrc[v]]),
                      "tgt": str(B.obj_labels[B.vtgt[v]])} for v in B.verticals],
        "vertical_identities": {str(B.obj_labels[o]): B.vlabel(B.ver_identity[o]) for o in B.objects},
        "vertical_compose": [[B.vlabel(g), B.vlabel(f), B.vlabel(r)]
                             for (g, f), r in sorted(B.ver_comp.items())],
        "squares": [{"id": B.slabel(s), "top": B.hlabel(B.top[s]), "bottom": B.hlabel(B.bottom[s]),
                     "left": B.vlabel(B.left[s]), "right": B.vlabel(B.right[s])} for s in B.squares],
        "square_hcomp": [[B.slabel(a), B.slabel(b), B.slabel(r)] for (a, b), r in sorted(B.sq_hcomp.items())],
        "square_vcomp": [[B.slabel(a), B.slabel(b), B.slabel(r)] for (a, b), r in sorted(B.sq_vcomp.items())],
        "square_ver_identities": {B.hlabel(h): B.slabel(B.sq_ver_identity[h]) for h in B.horizontals},
        "square_hor_identities": {B.vlabel(v): B.slabel(B.sq_hor_identity[v]) for v in B.verticals},
    }
    if pairs is not None:
        doc["pairs"] = pairs
    return doc


def load_double_category(path: str | Path, validate: bool = True) -> DoubleCategoryData:
    doc = read_json(path)
    check_schema(doc, "doublecat")
    B = double_category_from_doc(doc)
    if validate:
        rep = validate_double_category(B)
        if not rep.ok:
            raise InputValidationError(f"{path}: double category is invalid\n{rep}", report=rep)
    return B


def dumps(doc: Any) -> str:
    """Deterministic serialization used for every file the package writes."""
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
