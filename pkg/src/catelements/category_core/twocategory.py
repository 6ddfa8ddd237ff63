"""Finite strict 2-categories.

Conventions used everywhere in the package:

* ``compose(g, f)`` is ``g∘f`` for 1-cells ``f: a→b``, ``g: b→c``;
* ``vertical_compose(beta, alpha)`` is ``β∘α`` for ``α: f⇒g``, ``β: g⇒h``;
* ``horizontal_paste(alpha, beta)`` is ``α|β``: ``α`` sits on the left
  (between ``a`` and ``b``), ``β`` on the right (between ``b`` and ``c``);
  its source is ``src(β)∘src(α)``.

Whiskering is pasting with an identity 2-cell.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from functools import cached_property

from ..errors import CompositionError
from .category import FiniteCategory
from .report import ValidationReport


class FiniteTwoCategory:
    def __init__(
        self,
        obj_labels: Sequence,
        cell1: Sequence[tuple],
        identity1: Sequence[int],
        cell2: Sequence[tuple],
        identity2: Sequence[int],
        vcomp: Mapping[tuple[int, int], int],
        comp1: Mapping[tuple[int, int], int],
        paste: Mapping[tuple[int, int], int],
        name: str = "",
    ):
        """``cell1`` holds ``(label, src_obj, tgt_obj)``; ``cell2`` holds ``(label, src_1cell, tgt_1cell)``."""
        self.obj_labels = tuple(obj_labels)
        self.cell1_labels = tuple(c[0] for c in cell1)
        self.src1 = tuple(c[1] for c in cell1)
        self.tgt1 = tuple(c[2] for c in cell1)
        self.identity1 = tuple(identity1)
        self.cell2_labels = tuple(c[0] for c in cell2)
        self.src2 = tuple(c[1] for c in cell2)
        self.tgt2 = tuple(c[2] for c in cell2)
        self.identity2 = tuple(identity2)
        self.vcomp = dict(vcomp)
        self.comp1 = dict(comp1)
        self.paste = dict(paste)
        self.name = name

    @property
    def objects(self) -> range:
        return range(len(self.obj_labels))

    @property
    def one_cells(self) -> range:
        return range(len(self.cell1_labels))

    @property
    def two_cells(self) -> range:
        return range(len(self.cell2_labels))

    def obj_label(self, a: int) -> str:
        return str(self.obj_labels[a])

    def label1(self, f: int) -> str:
        return str(self.cell1_labels[f])

    def label2(self, alpha: int) -> str:
        return str(self.cell2_labels[alpha])

    def src_obj(self, alpha: int) -> int:
        return self.src1[self.src2[alpha]]

    def tgt_obj(self, alpha: int) -> int:
        return self.tgt1[self.src2[alpha]]

    @cached_property
    def out1(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in self.objects]
        for f in self.one_cells:
            out[self.src1[f]].append(f)
        return tuple(tuple(o) for o in out)

    @cached_property
    def out2(self) -> tuple[tuple[int, ...], ...]:
        """2-cells grouped by their source 1-cell."""
        out: list[list[int]] = [[] for _ in self.one_cells]
        for a in self.two_cells:
            out[self.src2[a]].append(a)
        return tuple(tuple(o) for o in out)

    @cached_property
    def cells_from(self) -> tuple[tuple[int, ...], ...]:
        """2-cells grouped by their source object."""
        out: list[list[int]] = [[] for _ in self.objects]
        for a in self.two_cells:
            out[self.src_obj(a)].append(a)
        return tuple(tuple(o) for o in out)

    def is_identity1(self, f: int) -> bool:
        return self.identity1[self.src1[f]] == f

    def compose(self, g: int, f: int) -> int:
        try:
            return self.comp1[(g, f)]
        except KeyError:
            raise CompositionError(
                f"1-cells {self.label1(g)}∘{self.label1(f)} not composable: "
                f"{self.label1(f)} ends at {self.obj_label(self.tgt1[f])}, "
                f"{self.label1(g)} starts at {self.obj_label(self.src1[g])}"
            ) from None

    def compose_chain(self, cells: Sequence[int]) -> int:
        """Compose ``cells[0]`` first (diagrammatic order)."""
        acc = cells[0]
        for c in cells[1:]:
            acc = self.compose(c, acc)
        return acc

    def vertical_compose(self, beta: int, alpha: int) -> int:
        try:
            return self.vcomp[(beta, alpha)]
        except KeyError:
            raise CompositionError(
                f"2-cells {self.label2(beta)}∘{self.label2(alpha)} not vertically composable: "
                f"{self.label2(alpha)}: {self.label1(self.src2[alpha])}⇒{self.label1(self.tgt2[alpha])}, "
                f"{self.label2(beta)}: {self.label1(self.src2[beta])}⇒{self.label1(self.tgt2[beta])}"
            ) from None

    def horizontal_paste(self, alpha: int, beta: int) -> int:
        try:
            return self.paste[(alpha, beta)]
        except KeyError:
            raise CompositionError(
                f"2-cells {self.label2(alpha)}|{self.label2(beta)} not horizontally adjacent: "
                f"{self.label2(alpha)} ends at {self.obj_label(self.tgt_obj(alpha))}, "
                f"{self.label2(beta)} starts at {self.obj_label(self.src_obj(beta))}"
            ) from None

    def paste_chain(self, cells: Sequence[int]) -> int:
        acc = cells[0]
        for c in cells[1:]:
            acc = self.horizontal_paste(acc, c)
        return acc

    def vertical_chain(self, cells: Sequence[int]) -> int:
        """``cells[-1]∘...∘cells[0]``."""
        acc = cells[0]
        for c in cells[1:]:
            acc = self.vertical_compose(c, acc)
        return acc

    def whisker_pre(self, f: int, beta: int) -> int:
        """``f`` followed by ``β``: the pasting ``id_f|β``."""
        return self.horizontal_paste(self.identity2[f], beta)

    def whisker_post(self, alpha: int, g: int) -> int:
        """``α`` followed by ``g``: the pasting ``α|id_g``."""
        return self.horizontal_paste(alpha, self.identity2[g])

    def hom(self, a: int, b: int) -> FiniteCategory:
        """Hom-category; its objects/morphisms are labelled by the global cell IDs."""
        ones = [f for f in self.out1[a] if self.tgt1[f] == b]
        pos1 = {f: i for i, f in enumerate(ones)}
        twos = [al for f in ones for al in self.out2[f]]
        pos2 = {al: i for i, al in enumerate(twos)}
        return FiniteCategory(
            ones, twos,
            [pos1[self.src2[al]] for al in twos],
            [pos1[self.tgt2[al]] for al in twos],
            [pos2[self.identity2[f]] for f in ones],
            {(pos2[b_], pos2[a_]): pos2[c] for (b_, a_), c in self.vcomp.items() if a_ in pos2},
            name=f"{self.name}({self.obj_label(a)},{self.obj_label(b)})",
        )

    def underlying_category(self) -> FiniteCategory:
        return FiniteCategory(
            self.obj_labels, self.cell1_labels, self.src1, self.tgt1, self.identity1,
            self.comp1, name=f"U{self.name}",
        )

    def __repr__(self) -> str:
        return (f"FiniteTwoCategory({self.name!r}, {len(self.obj_labels)} objects, "
                f"{len(self.cell1_labels)} 1-cells, {len(self.cell2_labels)} 2-cells)")


def validate_two_category(C: FiniteTwoCategory) -> ValidationReport:
    """Exhaustive check of strictness axioms.

    Runs in stages (cells, identities, vertical table, 1-cell table, pasting
    table, axioms); a stage with structural errors stops the run so that a
    single corrupted entry is reported once rather than through every
    axiom that reads it.
    """
    rep = ValidationReport(f"2-category {C.name}")
    n0, n1, n2 = len(C.obj_labels), len(C.cell1_labels), len(C.cell2_labels)

    for f in C.one_cells:
        if not (0 <= C.src1[f] < n0 and 0 <= C.tgt1[f] < n0):
            rep.add("structural", "dangling 1-cell boundary", (C.label1(f),))
    for al in C.two_cells:
        s, t = C.src2[al], C.tgt2[al]
        if not (0 <= s < n1 and 0 <= t < n1):
            rep.add("structural", "dangling 2-cell boundary", (C.label2(al),))
        elif (C.src1[s], C.tgt1[s]) != (C.src1[t], C.tgt1[t]):
            rep.add("structural", "2-cell between non-parallel 1-cells", (C.label2(al),))
    if not rep.ok:
        return rep

    for a in C.objects:
        i = C.identity1[a]
        if not 0 <= i < n1 or C.src1[i] != a or C.tgt1[i] != a:
            rep.add("structural", "identity 1-cell has wrong boundary", (C.obj_label(a),))
    for f in C.one_cells:
        i = C.identity2[f]
        if not 0 <= i < n2 or C.src2[i] != f or C.tgt2[i] != f:
            rep.add("structural", "identity 2-cell has wrong boundary", (C.label1(f),))
    if not rep.ok:
        return rep

    for al in C.two_cells:
        for be in C.out2[C.tgt2[al]]:
            rep.checked += 1
            r = C.vcomp.get((be, al))
            if r is None:
                rep.add("structural", "missing vertical composite", (C.label2(be), C.label2(al)))
            elif not 0 <= r < n2 or C.src2[r] != C.src2[al] or C.tgt2[r] != C.tgt2[be]:
                rep.add("structural", "vertical composite has wrong boundary",
                        (C.label2(be), C.label2(al)))
    for (be, al) in C.vcomp:
        if not (0 <= al < n2 and 0 <= be < n2) or C.tgt2[al] != C.src2[be]:
            rep.add("structural", "vertical composite of non-composable pair", (be, al))
    if not rep.ok:
        return rep

    for f in C.one_cells:
        for g in C.out1[C.tgt1[f]]:
            rep.checked += 1
            r = C.comp1.get((g, f))
            if r is None:
                rep.add("structural", "missing 1-cell composite", (C.label1(g), C.label1(f)))
            elif not 0 <= r < n1 or C.src1[r] != C.src1[f] or C.tgt1[r] != C.tgt1[g]:
                rep.add("structural", "1-cell composite has wrong boundary",
                        (C.label1(g), C.label1(f)))
    for (g, f) in C.comp1:
        if not (0 <= f < n1 and 0 <= g < n1) or C.tgt1[f] != C.src1[g]:
            rep.add("structural", "1-cell composite of non-composable pair", (g, f))
    if not rep.ok:
        return rep

    for al in C.two_cells:
        for be in C.cells_from[C.tgt_obj(al)]:
            rep.checked += 1
            r = C.paste.get((al, be))
            want_s = C.comp1[(C.src2[be], C.src2[al])]
            want_t = C.comp1[(C.tgt2[be], C.tgt2[al])]
            if r is None:
                rep.add("structural", "missing pasting", (C.label2(al), C.label2(be)))
            elif not 0 <= r < n2 or C.src2[r] != want_s or C.tgt2[r] != want_t:
                rep.add("structural", "pasting has wrong boundary", (C.label2(al), C.label2(be)))
    for (al, be) in C.paste:
        if not (0 <= al < n2 and 0 <= be < n2) or C.tgt_obj(al) != C.src_obj(be):
            rep.add("structural", "pasting of non-adjacent pair", (al, be))
    if not rep.ok:
        return rep

    # vertical composition: unit + associativity inside each hom
    for al in C.two_cells:
        rep.checked += 2
        if C.vcomp[(al, C.identity2[C.src2[al]])] != al:
            rep.add("axiom", "vertical right unit", (C.label2(al),))
        if C.vcomp[(C.identity2[C.tgt2[al]], al)] != al:
            rep.add("axiom", "vertical left unit", (C.label2(al),))
        for be in C.out2[C.tgt2[al]]:
            ba = C.vcomp[(be, al)]
            for ga in C.out2[C.tgt2[be]]:
                rep.checked += 1
                if C.vcomp[(ga, ba)] != C.vcomp[(C.vcomp[(ga, be)], al)]:
                    rep.add("axiom", "vertical associativity",
                            (C.label2(ga), C.label2(be), C.label2(al)))

    # 1-cell composition
    for f in C.one_cells:
        rep.checked += 2
        if C.comp1[(f, C.identity1[C.src1[f]])] != f:
            rep.add("axiom", "1-cell right unit", (C.label1(f),))
        if C.comp1[(C.identity1[C.tgt1[f]], f)] != f:
            rep.add("axiom", "1-cell left unit", (C.label1(f),))
        for g in C.out1[C.tgt1[f]]:
            gf = C.comp1[(g, f)]
            for h in C.out1[C.tgt1[g]]:
                rep.checked += 1
                if C.comp1[(h, gf)] != C.comp1[(C.comp1[(h, g)], f)]:
                    rep.add("axiom", "1-cell associativity",
                            (C.label1(h), C.label1(g), C.label1(f)))

    # pasting: units, identities, associativity, interchange
    for al in C.two_cells:
        rep.checked += 2
        ida = C.identity2[C.identity1[C.src_obj(al)]]
        idb = C.identity2[C.identity1[C.tgt_obj(al)]]
        if C.paste[(al, idb)] != al:
            rep.add("axiom", "pasting right unit", (C.label2(al),))
        if C.paste[(ida, al)] != al:
            rep.add("axiom", "pasting left unit", (C.label2(al),))
    for f in C.one_cells:
        for g in C.out1[C.tgt1[f]]:
            rep.checked += 1
            if C.paste[(C.identity2[f], C.identity2[g])] != C.identity2[C.comp1[(g, f)]]:
                rep.add("axiom", "pasting preserves identities", (C.label1(f), C.label1(g)))
    for al in C.two_cells:
        for be in C.cells_from[C.tgt_obj(al)]:
            ab = C.paste[(al, be)]
            for ga in C.cells_from[C.tgt_obj(be)]:
                rep.checked += 1
                if C.paste[(ab, ga)] != C.paste[(al, C.paste[(be, ga)])]:
                    rep.add("axiom", "pasting associativity",
                            (C.label2(al), C.label2(be), C.label2(ga)))
    for al in C.two_cells:
        for al2 in C.out2[C.tgt2[al]]:
            v_left = C.vcomp[(al2, al)]
            for be in C.cells_from[C.tgt_obj(al)]:
                for be2 in C.out2[C.tgt2[be]]:
                    rep.checked += 1
                    lhs = C.paste[(v_left, C.vcomp[(be2, be)])]
                    rhs = C.vcomp[(C.paste[(al2, be2)], C.paste[(al, be)])]
                    if lhs != rhs:
                        rep.add("axiom", "interchange",
                                (C.label2(al), C.label2(al2), C.label2(be), C.label2(be2)))
    return rep
