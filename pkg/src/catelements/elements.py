"""The 2-category and the double category of elements of ``F: C^op → Cat``.

Keys used to intern cells (all entries are IDs of ``C`` or of some ``Fc``):

* objects ``(c, x)`` with ``x`` an object of ``Fc``;
* ∫F 1-cells ``(f, φ, x')`` for ``f: c → c'`` and ``φ: x → Ff(x')`` in ``Fc``;
* ∫F 2-cells ``(α, u)`` with ``u`` the ID of the source 1-cell; the target
  is forced to be ``(g, (Fα)_{x'}∘φ, x')``;
* ∬F horizontals ``(f, x')``, running ``(c, Ff(x')) → (c', x')``;
* ∬F verticals ``(c, φ)`` with ``φ`` a morphism of ``Fc``;
* ∬F squares ``(α, φ)`` with ``φ: x' → y'`` the right edge; the left edge
  is forced to be ``(Fα)_{y'}∘Ff(φ)``.
"""

from __future__ import annotations

from .category_core import DoubleCategoryData, FiniteTwoCategory, TwoFunctorToCat


class ElementsTwoCategory(FiniteTwoCategory):
    """A :class:`FiniteTwoCategory` remembering the key of every cell."""

    def __init__(self, F: TwoFunctorToCat, obj_keys, cell1_keys, cell2_keys, **tables):
        super().__init__(**tables)
        self.functor = F
        self.obj_keys = tuple(obj_keys)
        self.cell1_keys = tuple(cell1_keys)
        self.cell2_keys = tuple(cell2_keys)
        self.obj_index = {k: i for i, k in enumerate(self.obj_keys)}
        self.cell1_index = {k: i for i, k in enumerate(self.cell1_keys)}
        self.cell2_index = {k: i for i, k in enumerate(self.cell2_keys)}


class ElementsDoubleCategory(DoubleCategoryData):
    """A :class:`DoubleCategoryData` remembering the key of every cell."""

    def __init__(self, F: TwoFunctorToCat, obj_keys, hor_keys, ver_keys, sq_keys, **tables):
        super().__init__(**tables)
        self.functor = F
        self.obj_keys = tuple(obj_keys)
        self.hor_keys = tuple(hor_keys)
        self.ver_keys = tuple(ver_keys)
        self.sq_keys = tuple(sq_keys)
        self.obj_index = {k: i for i, k in enumerate(self.obj_keys)}
        self.hor_index = {k: i for i, k in enumerate(self.hor_keys)}
        self.ver_index = {k: i for i, k in enumerate(self.ver_keys)}
        self.sq_index = {k: i for i, k in enumerate(self.sq_keys)}


def _object_keys(F: TwoFunctorToCat) -> list[tuple[int, int]]:
    C = F.source
    return [(c, x) for c in C.objects for x in F.category(c).objects]


def _obj_label(F: TwoFunctorToCat, key) -> str:
    c, x = key
    return f"({F.source.obj_label(c)},{F.category(c).obj_label(x)})"


def two_category_of_elements(F: TwoFunctorToCat) -> ElementsTwoCategory:
    C = F.source
    objs = _object_keys(F)
    oidx = {k: i for i, k in enumerate(objs)}

    cell1: list[tuple[int, int, int]] = []
    for f in C.one_cells:
        c, c2 = C.src1[f], C.tgt1[f]
        Fc, Ff = F.category(c), F.functor(f)
        for x2 in F.category(c2).objects:
            for phi in Fc.incoming[Ff.obj_map[x2]]:
                cell1.append((f, phi, x2))
    idx1 = {k: i for i, k in enumerate(cell1)}

    def src_obj(key):
        f, phi, _ = key
        c = C.src1[f]
        return oidx[(c, F.category(c).src[phi])]

    def tgt_obj(key):
        f, _, x2 = key
        return oidx[(C.tgt1[f], x2)]

    identity1 = [idx1[(C.identity1[c], F.category(c).identity[x], x)] for c, x in objs]

    def comp_key(v: int, u: int):
        g, psi, x3 = cell1[v]
        f, phi, _ = cell1[u]
        Fc = F.category(C.src1[f])
        return (C.compose(g, f), Fc.compose(F.push_morphism(f, psi), phi), x3)

    comp1 = {}
    out_by_src: dict[int, list[int]] = {}
    for u, key in enumerate(cell1):
        out_by_src.setdefault(src_obj(key), []).append(u)
    for u, key in enumerate(cell1):
        for v in out_by_src.get(tgt_obj(key), ()):
            comp1[(v, u)] = idx1[comp_key(v, u)]

    def target_1cell(alpha: int, u: int) -> int:
        f, phi, x2 = cell1[u]
        Fc = F.category(C.src1[f])
        return idx1[(C.tgt2[alpha], Fc.compose(F.component(alpha, x2), phi), x2)]

    cell2 = [(alpha, u) for u, (f, _, _) in enumerate(cell1) for alpha in C.out2[f]]
    idx2 = {k: i for i, k in enumerate(cell2)}
    tgt2 = [target_1cell(alpha, u) for alpha, u in cell2]
    identity2 = [idx2[(C.identity2[cell1[u][0]], u)] for u in range(len(cell1))]

    by_src1: dict[int, list[int]] = {}
    for a, (_, u) in enumerate(cell2):
        by_src1.setdefault(u, []).append(a)
    vcomp = {}
    for a, (alpha, u) in enumerate(cell2):
        for b in by_src1.get(tgt2[a], ()):
            vcomp[(b, a)] = idx2[(C.vertical_compose(cell2[b][0], alpha), u)]

    cells_from: dict[int, list[int]] = {}
    for a, (_, u) in enumerate(cell2):
        cells_from.setdefault(src_obj(cell1[u]), []).append(a)
    paste = {}
    for a, (alpha, u) in enumerate(cell2):
        for b in cells_from.get(tgt_obj(cell1[u]), ()):
            beta, v = cell2[b]
            paste[(a, b)] = idx2[(C.horizontal_paste(alpha, beta), comp1[(v, u)])]

    def label1(key) -> str:
        f, phi, x2 = key
        c2 = C.tgt1[f]
        return (f"({C.label1(f)},{F.category(C.src1[f]).label(phi)})"
                f"->{_obj_label(F, (c2, x2))}")

    labels1 = [label1(k) for k in cell1]
    return ElementsTwoCategory(
        F, objs, cell1, cell2,
        obj_labels=[_obj_label(F, k) for k in objs],
        cell1=[(labels1[u], src_obj(k), tgt_obj(k)) for u, k in enumerate(cell1)],
        identity1=identity1,
        cell2=[(f"{C.label2(alpha)}@{labels1[u]}", u, tgt2[a]) for a, (alpha, u) in enumerate(cell2)],
        identity2=identity2,
        vcomp=vcomp,
        comp1=comp1,
        paste=paste,
        name=f"∫{F.name}",
    )


def double_category_of_elements(F: TwoFunctorToCat) -> ElementsDoubleCategory:
    C = F.source
    objs = _object_keys(F)
    oidx = {k: i for i, k in enumerate(objs)}

    hor = [(f, x2) for f in C.one_cells for x2 in F.category(C.tgt1[f]).objects]
    hidx = {k: i for i, k in enumerate(hor)}
    hsrc = [oidx[(C.src1[f], F.push_object(f, x2))] for f, x2 in hor]
    htgt = [oidx[(C.tgt1[f], x2)] for f, x2 in hor]
    hor_identity = [hidx[(C.identity1[c], x)] for c, x in objs]
    hor_comp = {}
    by_hsrc: dict[int, list[int]] = {}
    for h in range(len(hor)):
        by_hsrc.setdefault(hsrc[h], []).append(h)
    for h, (f, _) in enumerate(hor):
        for k in by_hsrc.get(htgt[h], ()):
            g, x3 = hor[k]
            hor_comp[(k, h)] = hidx[(C.compose(g, f), x3)]

    ver = [(c, phi) for c in C.objects for phi in F.category(c).morphisms]
    vidx = {k: i for i, k in enumerate(ver)}
    vsrc = [oidx[(c, F.category(c).src[phi])] for c, phi in ver]
    vtgt = [oidx[(c, F.category(c).tgt[phi])] for c, phi in ver]
    ver_identity = [vidx[(c, F.category(c).identity[x])] for c, x in objs]
    ver_comp = {}
    for c in C.objects:
        for (psi, phi), r in F.category(c).table.items():
            ver_comp[(vidx[(c, psi)], vidx[(c, phi)])] = vidx[(c, r)]

    sq = [(alpha, phi) for alpha in C.two_cells for phi in F.category(C.tgt_obj(alpha)).morphisms]
    sidx = {k: i for i, k in enumerate(sq)}

    def boundary(key):
        alpha, phi = key
        c, c2 = C.src_obj(alpha), C.tgt_obj(alpha)
        Fc2 = F.category(c2)
        f, g = C.src2[alpha], C.tgt2[alpha]
        x2, y2 = Fc2.src[phi], Fc2.tgt[phi]
        left = F.category(c).compose(F.component(alpha, y2), F.push_morphism(f, phi))
        return hidx[(f, x2)], hidx[(g, y2)], vidx[(c, left)], vidx[(c2, phi)]

    bounds = [boundary(k) for k in sq]
    by_left: dict[int, list[int]] = {}
    by_top: dict[int, list[int]] = {}
    for s, (t, _, l, _) in enumerate(bounds):
        by_left.setdefault(l, []).append(s)
        by_top.setdefault(t, []).append(s)
    sq_hcomp, sq_vcomp = {}, {}
    for s, (alpha, phi) in enumerate(sq):
        for r in by_left.get(bounds[s][3], ()):
            beta, chi = sq[r]
            sq_hcomp[(s, r)] = sidx[(C.horizontal_paste(alpha, beta), chi)]
        for r in by_top.get(bounds[s][1], ()):
            beta, chi = sq[r]
            c2 = C.tgt_obj(alpha)
            sq_vcomp[(s, r)] = sidx[(C.vertical_compose(beta, alpha), F.category(c2).compose(chi, phi))]
    sq_ver_identity = [sidx[(C.identity2[f], F.category(C.tgt1[f]).identity[x2])] for f, x2 in hor]
    sq_hor_identity = [sidx[(C.identity2[C.identity1[c]], phi)] for c, phi in ver]

    hlabels = [f"{C.label1(f)}:{_obj_label(F, objs[hsrc[h]])}->{_obj_label(F, objs[htgt[h]])}"
               for h, (f, _) in enumerate(hor)]
    vlabels = [f"{F.category(c).label(phi)}@{C.obj_label(c)}" for c, phi in ver]
    slabels = [f"[{C.label2(alpha)}|{vlabels[vidx[(C.tgt_obj(alpha), phi)]]}]" for alpha, phi in sq]
    return ElementsDoubleCategory(
        F, objs, hor, ver, sq,
        obj_labels=[_obj_label(F, k) for k in objs],
        hor=list(zip(hlabels, hsrc, htgt)),
        hor_identity=hor_identity,
        hor_comp=hor_comp,
        ver=list(zip(vlabels, vsrc, vtgt)),
        ver_identity=ver_identity,
        ver_comp=ver_comp,
        squares=[(slabels[s],) + bounds[s] for s in range(len(sq))],
        sq_hcomp=sq_hcomp,
        sq_vcomp=sq_vcomp,
        sq_hor_identity=sq_hor_identity,
        sq_ver_identity=sq_ver_identity,
        name=f"∬{F.name}",
    )
