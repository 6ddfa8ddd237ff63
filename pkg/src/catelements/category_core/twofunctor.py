"""Strict 2-functors ``C^op → Cat`` (contravariant on 1-cells, covariant on 2-cells)."""

from __future__ import annotations

from collections.abc import Sequence

from .category import (FiniteCategory, FiniteFunctor, FiniteNatTrans, validate_category,
                       validate_functor, validate_nat_trans)
from .report import ValidationReport
from .twocategory import FiniteTwoCategory


class TwoFunctorToCat:
    """``categories[c]`` is ``Fc``; ``functors[f]`` is ``Ff: Fc' → Fc`` for ``f: c → c'``;
    ``transformations[α]`` is ``Fα: Ff ⇒ Fg`` for ``α: f ⇒ g``."""

    def __init__(self, source: FiniteTwoCategory, categories: Sequence[FiniteCategory],
                 functors: Sequence[FiniteFunctor], transformations: Sequence[FiniteNatTrans],
                 name: str = ""):
        self.source = source
        self.categories = tuple(categories)
        self.functors = tuple(functors)
        self.transformations = tuple(transformations)
        self.name = name

    def category(self, c: int) -> FiniteCategory:
        return self.categories[c]

    def functor(self, f: int) -> FiniteFunctor:
        return self.functors[f]

    def transformation(self, alpha: int) -> FiniteNatTrans:
        return self.transformations[alpha]

    def push_object(self, f: int, x: int) -> int:
        """``Ff(x)`` for ``x`` an object of ``F(tgt f)``."""
        return self.functors[f].obj_map[x]

    def push_morphism(self, f: int, phi: int) -> int:
        return self.functors[f].mor_map[phi]

    def component(self, alpha: int, x: int) -> int:
        """``(Fα)_x``, a morphism of ``F(src α)``."""
        return self.transformations[alpha].components[x]

    def __repr__(self) -> str:
        return f"TwoFunctorToCat({self.name!r} on {self.source.name!r})"


def horizontal_nat_trans(F: TwoFunctorToCat, alpha: int, beta: int) -> list[int]:
    """Components of the Cat-level horizontal composite of ``Fα`` and ``Fβ``.

    For ``α: f⇒f'`` (``a→b``) and ``β: g⇒g'`` (``b→c``) the composite goes
    ``Ff∘Fg ⇒ Ff'∘Fg'`` with component ``(Fα)_{Fg'(x)} ∘ Ff((Fβ)_x)``.
    """
    C = F.source
    f, g2 = C.src2[alpha], C.tgt2[beta]
    Fa, Fc = F.category(C.src_obj(alpha)), F.category(C.tgt_obj(beta))
    out = []
    for x in Fc.objects:
        first = F.push_morphism(f, F.component(beta, x))
        second = F.component(alpha, F.push_object(g2, x))
        out.append(Fa.compose(second, first))
    return out


def validate_two_functor(F: TwoFunctorToCat) -> ValidationReport:
    """Report failures of the strict contravariant 2-functor axioms.

    Failures of preservation of horizontal pastings are filed under kind
    ``paste`` so they can be told apart from the axioms the constructions
    actually rely on.
    """
    C = F.source
    rep = ValidationReport(f"2-functor {F.name}")
    if len(F.categories) != len(C.obj_labels):
        rep.add("structural", "category map does not cover every object",
                (len(F.categories), len(C.obj_labels)))
    if len(F.functors) != len(C.cell1_labels):
        rep.add("structural", "functor map does not cover every 1-cell",
                (len(F.functors), len(C.cell1_labels)))
    if len(F.transformations) != len(C.cell2_labels):
        rep.add("structural", "transformation map does not cover every 2-cell",
                (len(F.transformations), len(C.cell2_labels)))
    if not rep.ok:
        return rep

    for c in C.objects:
        rep.extend(validate_category(F.category(c)), prefix=f"F({C.obj_label(c)}): ")
    for f in C.one_cells:
        Ff = F.functor(f)
        if Ff.source is not F.category(C.tgt1[f]) or Ff.target is not F.category(C.src1[f]):
            rep.add("structural", "F(f) has wrong source/target category", (C.label1(f),))
    for al in C.two_cells:
        Fa = F.transformation(al)
        if Fa.source is not F.functor(C.src2[al]) or Fa.target is not F.functor(C.tgt2[al]):
            rep.add("structural", "F(α) between wrong functors", (C.label2(al),))
        elif len(Fa.components) != F.category(C.tgt_obj(al)).n_objects:
            rep.add("structural", "F(α) missing a component", (C.label2(al),))
    if not rep.ok:
        return rep
    for f in C.one_cells:
        rep.extend(validate_functor(F.functor(f)), prefix=f"F({C.label1(f)}): ")
    if not rep.ok:
        return rep
    for al in C.two_cells:
        rep.extend(validate_nat_trans(F.transformation(al)), prefix=f"F({C.label2(al)}): ")
    if not rep.ok:
        return rep

    for c in C.objects:
        rep.checked += 1
        if not F.functor(C.identity1[c]).same_as(FiniteFunctor.identity(F.category(c))):
            rep.add("functoriality", "F(id_c) = Id", (C.obj_label(c),))
    for f in C.one_cells:
        for g in C.out1[C.tgt1[f]]:
            rep.checked += 1
            # F(g∘f) = Ff∘Fg
            if not F.functor(C.comp1[(g, f)]).same_as(F.functor(g).then(F.functor(f))):
                rep.add("functoriality", "F(g∘f) = Ff∘Fg", (C.label1(g), C.label1(f)))
    for f in C.one_cells:
        rep.checked += 1
        if not F.transformation(C.identity2[f]).same_as(FiniteNatTrans.identity(F.functor(f))):
            rep.add("functoriality", "F(id_f) = id", (C.label1(f),))
    for al in C.two_cells:
        for be in C.out2[C.tgt2[al]]:
            rep.checked += 1
            lhs = F.transformation(C.vcomp[(be, al)])
            rhs = F.transformation(al).then(F.transformation(be))
            if not lhs.same_as(rhs):
                rep.add("functoriality", "F(β∘α) = Fβ∘Fα", (C.label2(be), C.label2(al)))
    for al in C.two_cells:
        for be in C.cells_from[C.tgt_obj(al)]:
            rep.checked += 1
            lhs = F.transformation(C.paste[(al, be)]).components
            if list(lhs) != horizontal_nat_trans(F, al, be):
                rep.add("paste", "F(α|β) = Fα*Fβ", (C.label2(al), C.label2(be)))
    return rep
