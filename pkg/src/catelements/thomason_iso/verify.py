"""Exhaustive verification that Φ and Θ are inverse simplicial isomorphisms."""

from __future__ import annotations

import numpy as np

from ..category_core import (TwoFunctorToCat, validate_double_category, validate_two_category)
from ..simplicial import (DEFAULT_MAX_DIM, SimplicialMap, is_simplicial_map, validate_bisimplicial,
                          validate_simplicial)
from .data import BarPair, DoubleSideSimplexData, TwoSideSimplexData

REPORT_VERSION = 1


class _Check:
    def __init__(self):
        self.checked = 0
        self.violations: list[dict] = []

    def fail(self, **witness) -> None:
        if len(self.violations) < 20:
            self.violations.append(witness)

    def to_dict(self) -> dict:
        return {"checked": self.checked, "violations": self.violations}


def describe_two_side(P: BarPair, t: TwoSideSimplexData) -> str:
    E = P.E
    parts = [" ".join(E.obj_label(t.objects[m]) for m in range(t.p, -1, -1))]
    parts += [f"{k}={E.label1(u)}" for k, u in sorted(t.morphisms.items())]
    parts += [f"{k}={E.label2(a)}" for k, a in sorted(t.cells.items())]
    return "; ".join(parts)


def describe_double_side(P: BarPair, u: DoubleSideSimplexData) -> str:
    B = P.B
    parts = [f"{k}={B.obj_labels[o]}" for k, o in sorted(u.objects.items()) if k[0] == k[1]]
    parts += [f"h{k}={B.hlabel(h)}" for k, h in sorted(u.horizontals.items())]
    parts += [f"v{k}={B.vlabel(v)}" for k, v in sorted(u.verticals.items())]
    parts += [f"s{k}={B.slabel(s)}" for k, s in sorted(u.squares.items())]
    return "; ".join(parts)


def two_side_redundancy(P: BarPair, t: TwoSideSimplexData, check: _Check) -> None:
    """Lower morphisms recomputed from the top morphism and the vertical composite of 2-cells."""
    F, C, E = P.F, P.C, P.E
    for m in range(2, t.p + 1):
        f_top, phi_top, base = E.cell1_keys[t.morphisms[(m, m - 1)]]
        c = C.src1[f_top]
        alpha = {n: E.cell2_keys[t.cells[(m, n)]][0] for n in range(m - 1)}
        for n in range(m - 1):
            check.checked += 1
            chain = C.vertical_chain([alpha[k] for k in range(m - 2, n - 1, -1)])
            want = (C.tgt2[alpha[n]], F.category(c).compose(F.component(chain, base), phi_top), base)
            if E.cell1_keys[t.morphisms[(m, n)]] != want:
                check.fail(equation="lower morphism from top", m=m, n=n,
                           simplex=describe_two_side(P, t))


def double_side_redundancy(P: BarPair, u: DoubleSideSimplexData, obj_check: _Check,
                           ver_check: _Check) -> None:
    """Objects recomputed from top objects; verticals recomputed from rightmost verticals."""
    F, C, B, p = P.F, P.C, P.B, u.p
    f = {k: B.hor_keys[h][0] for k, h in u.horizontals.items()}
    xx = {k: B.obj_keys[o] for k, o in u.objects.items()}
    for n in range(p + 1):
        y = xx[(n, n)][1]
        for m in range(n + 1, p + 1):
            y = F.push_object(f[(m, n)], y)
            obj_check.checked += 1
            if xx[(m, n)] != (C.src1[f[(m, n)]], y):
                obj_check.fail(equation="object from top object", m=m, n=n,
                               simplex=describe_double_side(P, u))
    for m in range(2, p + 1):
        c = xx[(m, m)][0]
        for n in range(m - 1):
            ver_check.checked += 1
            v = B.ver_keys[u.verticals[(n + 1, n)]][1]
            for k in range(n + 2, m + 1):
                v = F.push_morphism(f[(k, n)], v)
            pasted = C.paste_chain([B.sq_keys[u.squares[(k, n)]][0] for k in range(m, n + 1, -1)])
            want = F.category(c).compose(v, F.component(pasted, xx[(n + 1, n + 1)][1]))
            if B.ver_keys[u.verticals[(m, n)]] != (c, want):
                ver_check.fail(equation="vertical from rightmost vertical", m=m, n=n,
                               simplex=describe_double_side(P, u))


def inner_face_composition(P: BarPair, u: DoubleSideSimplexData, t: TwoSideSimplexData,
                           check: _Check) -> None:
    """For ``0 < i < p`` and ``k = p - i``, the composite of Θ's morphisms at ``(k, k-1)`` and
    ``(k+1, k-1)`` equals the morphism built from composed horizontals and verticals."""
    F, C, E, B, p = P.F, P.C, P.E, P.B, u.p
    for i in range(1, p):
        k = p - i
        check.checked += 1
        f_k = B.hor_keys[u.horizontals[(k, k - 1)]][0]
        f_k1 = B.hor_keys[u.horizontals[(k + 1, k - 1)]][0]
        c = B.obj_keys[u.objects[(k + 1, k + 1)]][0]
        base = B.obj_keys[u.objects[(k - 1, k - 1)]][1]
        v_k = B.ver_keys[u.verticals[(k, k - 1)]][1]
        v_low = B.ver_keys[u.verticals[(k + 1, k - 1)]][1]
        v_high = B.ver_keys[u.verticals[(k + 1, k)]][1]
        alpha = B.sq_keys[u.squares[(k + 1, k - 1)]][0]
        x_k = B.obj_keys[u.objects[(k, k)]][1]
        Fc = F.category(c)
        composite = E.cell1_keys[E.compose(t.morphisms[(k, k - 1)], t.morphisms[(k + 1, k - 1)])]
        by_definition = (C.compose(f_k, f_k1),
                         Fc.compose(F.push_morphism(f_k1, v_k),
                                    Fc.compose(F.component(alpha, x_k), v_high)), base)
        by_square = (C.compose(f_k, f_k1), Fc.compose(v_low, v_high), base)
        if not composite == by_definition == by_square:
            check.fail(face=i, p=p, simplex=describe_double_side(P, u))


def identity_morphisms(P: BarPair, check: _Check) -> None:
    """``(id_c, id_x)`` is the identity morphism on ``(c, x)``."""
    E, C, F = P.E, P.C, P.F
    for o, (c, x) in enumerate(E.obj_keys):
        check.checked += 1
        key = (C.identity1[c], F.category(c).identity[x], x)
        if E.cell1_index.get(key) != E.identity1[o]:
            check.fail(object=E.obj_label(o))


def verify_thomason_iso(F: TwoFunctorToCat, D: int = DEFAULT_MAX_DIM, P: BarPair | None = None) -> dict:
    """Build both bar constructions and check every claim about Φ and Θ up to degree ``D``."""
    P = P or BarPair(F, D)
    checks = {name: _Check() for name in (
        "structures_validate", "occurrences_agree", "bijection", "theta_after_phi", "phi_after_theta",
        "phi_simplicial", "theta_simplicial", "inner_face_composition", "identity_morphisms",
        "redundancy_two_side", "redundancy_objects", "redundancy_verticals")}

    structures = [validate_two_category(P.E), validate_double_category(P.B), validate_bisimplicial(P.X2),
                  validate_bisimplicial(P.Xd), validate_simplicial(P.W2), validate_simplicial(P.Wd)]
    for rep in structures:
        checks["structures_validate"].checked += 1
        if not rep.ok:
            checks["structures_validate"].fail(structure=rep.subject, violations=len(rep.violations))

    phi_map, theta_map, levels = [], [], []
    two_data: list[list[TwoSideSimplexData]] = []
    for p in range(D + 1):
        n2, nd = P.W2.size(p), P.Wd.size(p)
        levels.append({"p": p, "two_side": n2, "double_side": nd})
        fwd = np.full(n2, -1, dtype=np.int64)
        data_p = []
        for s in range(n2):
            t = P.encode_two_side(p, s)
            checks["occurrences_agree"].checked += 1
            data_p.append(t)
            two_side_redundancy(P, t, checks["redundancy_two_side"])
            fwd[s] = P.decode_double_side(P.phi(t))
        back = np.full(nd, -1, dtype=np.int64)
        for s in range(nd):
            u = P.encode_double_side(p, s)
            checks["occurrences_agree"].checked += 1
            double_side_redundancy(P, u, checks["redundancy_objects"], checks["redundancy_verticals"])
            t = P.theta(u)
            inner_face_composition(P, u, t, checks["inner_face_composition"])
            back[s] = P.decode_two_side(t)
        phi_map.append(fwd)
        theta_map.append(back)
        two_data.append(data_p)

        bij = checks["bijection"]
        bij.checked += 1
        if n2 != nd or len(np.unique(fwd)) != n2:
            bij.fail(p=p, two_side=n2, double_side=nd, image=int(len(np.unique(fwd))))
        for name, first, second, n in (("theta_after_phi", fwd, back, n2), ("phi_after_theta", back, fwd, nd)):
            ch = checks[name]
            ch.checked += n
            if n2 == nd:
                bad = np.flatnonzero(second[first] != np.arange(n))
                for s in bad[:3]:
                    ch.fail(p=p, simplex=int(s))
            else:
                ch.fail(p=p, reason="level sizes differ")

    identity_morphisms(P, checks["identity_morphisms"])

    def describe_two(k, s):
        return describe_two_side(P, two_data[k][s])

    def describe_double(k, s):
        return describe_double_side(P, P.encode_double_side(k, s))

    sizes_equal = all(lv["two_side"] == lv["double_side"] for lv in levels)
    for name, src, tgt, maps, desc in (("phi_simplicial", P.W2, P.Wd, phi_map, describe_two),
                                      ("theta_simplicial", P.Wd, P.W2, theta_map, describe_double)):
        ch = checks[name]
        if not sizes_equal:
            ch.fail(reason="level sizes differ")
            continue
        rep = is_simplicial_map(SimplicialMap(src, tgt, maps, name=name, describe=desc))
        ch.checked += rep.checked
        for v in rep.violations:
            ch.fail(operator=v.witness[0] if v.witness else v.rule, level=v.witness[1] if v.witness else None,
                    detail=v.message)

    out = {name: ch.to_dict() for name, ch in checks.items()}
    ok = all(not ch.violations for ch in checks.values())
    return {"report_version": REPORT_VERSION, "command": "iso-verify", "functor": F.name, "max_dim": D,
            "levels": levels, "checks": out, "ok": ok}
