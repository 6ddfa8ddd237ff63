"""Finite strict double categories.

A square is drawn with horizontal morphisms ``top`` and ``bottom`` going
left to right and vertical morphisms ``left`` and ``right`` going top to
bottom.  ``sq_hcomp[(a, b)]`` puts ``a`` to the left of ``b``;
``sq_vcomp[(a, b)]`` puts ``a`` above ``b``.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from functools import cached_property

from ..errors import CompositionError
from .category import FiniteCategory, validate_category
from .report import ValidationReport


class DoubleCategoryData:
    def __init__(
        self,
        obj_labels: Sequence,
        hor: Sequence[tuple],
        hor_identity: Sequence[int],
        hor_comp: Mapping[tuple[int, int], int],
        ver: Sequence[tuple],
        ver_identity: Sequence[int],
        ver_comp: Mapping[tuple[int, int], int],
        squares: Sequence[tuple],
        sq_hcomp: Mapping[tuple[int, int], int],
        sq_vcomp: Mapping[tuple[int, int], int],
        sq_hor_identity: Sequence[int],
        sq_ver_identity: Sequence[int],
        name: str = "",
    ):
        """``hor``/``ver`` hold ``(label, src, tgt)``; ``squares`` hold
        ``(label, top, bottom, left, right)``.  ``sq_ver_identity[f]`` is
        ``e_f`` (the vertical identity square on horizontal ``f``) and
        ``sq_hor_identity[φ]`` is ``id_φ``."""
        self.obj_labels = tuple(obj_labels)
        self.hor_labels = tuple(h[0] for h in hor)
        self.hsrc = tuple(h[1] for h in hor)
        self.htgt = tuple(h[2] for h in hor)
        self.hor_identity = tuple(hor_identity)
        self.hor_comp = dict(hor_comp)
        self.ver_labels = tuple(v[0] for v in ver)
        self.vsrc = tuple(v[1] for v in ver)
        self.vtgt = tuple(v[2] for v in ver)
        self.ver_identity = tuple(ver_identity)
        self.ver_comp = dict(ver_comp)
        self.sq_labels = tuple(s[0] for s in squares)
        self.top = tuple(s[1] for s in squares)
        self.bottom = tuple(s[2] for s in squares)
        self.left = tuple(s[3] for s in squares)
        self.right = tuple(s[4] for s in squares)
        self.sq_hcomp = dict(sq_hcomp)
        self.sq_vcomp = dict(sq_vcomp)
        self.sq_hor_identity = tuple(sq_hor_identity)
        self.sq_ver_identity = tuple(sq_ver_identity)
        self.name = name

    @property
    def objects(self) -> range:
        return range(len(self.obj_labels))

    @property
    def horizontals(self) -> range:
        return range(len(self.hor_labels))

    @property
    def verticals(self) -> range:
        return range(len(self.ver_labels))

    @property
    def squares(self) -> range:
        return range(len(self.sq_labels))

    def hlabel(self, h: int) -> str:
        return str(self.hor_labels[h])

    def vlabel(self, v: int) -> str:
        return str(self.ver_labels[v])

    def slabel(self, s: int) -> str:
        return str(self.sq_labels[s])

    @cached_property
    def squares_by_top(self) -> dict[int, tuple[int, ...]]:
        out: dict[int, list[int]] = {}
        for s in self.squares:
            out.setdefault(self.top[s], []).append(s)
        return {k: tuple(v) for k, v in out.items()}

    @cached_property
    def squares_by_left(self) -> dict[int, tuple[int, ...]]:
        out: dict[int, list[int]] = {}
        for s in self.squares:
            out.setdefault(self.left[s], []).append(s)
        return {k: tuple(v) for k, v in out.items()}

    def square_paste(self, a: int, b: int) -> int:
        try:
            return self.sq_hcomp[(a, b)]
        except KeyError:
            raise CompositionError(
                f"squares {self.slabel(a)}|{self.slabel(b)} not adjacent: right edge "
                f"{self.vlabel(self.right[a])} vs left edge {self.vlabel(self.left[b])}") from None

    def square_stack(self, a: int, b: int) -> int:
        try:
            return self.sq_vcomp[(a, b)]
        except KeyError:
            raise CompositionError(
                f"squares {self.slabel(a)} over {self.slabel(b)} not stackable: bottom edge "
                f"{self.hlabel(self.bottom[a])} vs top edge {self.hlabel(self.top[b])}") from None

    def horizontal_category(self) -> FiniteCategory:
        return FiniteCategory(self.obj_labels, self.hor_labels, self.hsrc, self.htgt,
                              self.hor_identity, self.hor_comp, name=f"H{self.name}")

    def vertical_category(self) -> FiniteCategory:
        return FiniteCategory(self.obj_labels, self.ver_labels, self.vsrc, self.vtgt,
                              self.ver_identity, self.ver_comp, name=f"V{self.name}")

    def __repr__(self) -> str:
        return (f"DoubleCategoryData({self.name!r}, {len(self.obj_labels)} objects, "
                f"{len(self.hor_labels)} horizontal, {len(self.ver_labels)} vertical, "
                f"{len(self.sq_labels)} squares)")


def validate_double_category(B: DoubleCategoryData) -> ValidationReport:
    rep = ValidationReport(f"double category {B.name}")
    n0, nh, nv, ns = len(B.obj_labels), len(B.hor_labels), len(B.ver_labels), len(B.sq_labels)
    for s in B.squares:
        t, b, l, r = B.top[s], B.bottom[s], B.left[s], B.right[s]
        if not (0 <= t < nh and 0 <= b < nh and 0 <= l < nv and 0 <= r < nv):
            rep.add("structural", "dangling square boundary", (B.slabel(s),))
        elif (B.hsrc[t] != B.vsrc[l] or B.htgt[t] != B.vsrc[r]
              or B.hsrc[b] != B.vtgt[l] or B.htgt[b] != B.vtgt[r]):
            rep.add("structural", "square corners do not match", (B.slabel(s),))
    if not rep.ok:
        return rep
    rep.extend(validate_category(B.horizontal_category()), prefix="horizontal: ")
    rep.extend(validate_category(B.vertical_category()), prefix="vertical: ")
    if not rep.ok:
        return rep

    for h in B.horizontals:
        e = B.sq_ver_identity[h]
        if not 0 <= e < ns or (B.top[e], B.bottom[e], B.left[e], B.right[e]) != (
                h, h, B.ver_identity[B.hsrc[h]], B.ver_identity[B.htgt[h]]):
            rep.add("structural", "e_f has wrong boundary", (B.hlabel(h),))
    for v in B.verticals:
        i = B.sq_hor_identity[v]
        if not 0 <= i < ns or (B.top[i], B.bottom[i], B.left[i], B.right[i]) != (
                B.hor_identity[B.vsrc[v]], B.hor_identity[B.vtgt[v]], v, v):
            rep.add("structural", "id_φ has wrong boundary", (B.vlabel(v),))
    if not rep.ok:
        return rep

    by_left, by_top = B.squares_by_left, B.squares_by_top
    for a in B.squares:
        for b in by_left.get(B.right[a], ()):
            rep.checked += 1
            r = B.sq_hcomp.get((a, b))
            want = (B.hor_comp[(B.top[b], B.top[a])], B.hor_comp[(B.bottom[b], B.bottom[a])],
                    B.left[a], B.right[b])
            if r is None:
                rep.add("structural", "missing horizontal square composite", (B.slabel(a), B.slabel(b)))
            elif not 0 <= r < ns or (B.top[r], B.bottom[r], B.left[r], B.right[r]) != want:
                rep.add("structural", "horizontal square composite has wrong boundary",
                        (B.slabel(a), B.slabel(b)))
        for b in by_top.get(B.bottom[a], ()):
            rep.checked += 1
            r = B.sq_vcomp.get((a, b))
            want = (B.top[a], B.bottom[b], B.ver_comp[(B.left[b], B.left[a])],
                    B.ver_comp[(B.right[b], B.right[a])])
            if r is None:
                rep.add("structural", "missing vertical square composite", (B.slabel(a), B.slabel(b)))
            elif not 0 <= r < ns or (B.top[r], B.bottom[r], B.left[r], B.right[r]) != want:
                rep.add("structural", "vertical square composite has wrong boundary",
                        (B.slabel(a), B.slabel(b)))
    for (a, b) in B.sq_hcomp:
        if not (0 <= a < ns and 0 <= b < ns) or B.right[a] != B.left[b]:
            rep.add("structural", "horizontal composite of non-adjacent squares", (a, b))
    for (a, b) in B.sq_vcomp:
        if not (0 <= a < ns and 0 <= b < ns) or B.bottom[a] != B.top[b]:
            rep.add("structural", "vertical composite of non-adjacent squares", (a, b))
    if not rep.ok:
        return rep

    H, V = B.sq_hcomp, B.sq_vcomp
    for a in B.squares:
        rep.checked += 4
        if H[(B.sq_hor_identity[B.left[a]], a)] != a:
            rep.add("axiom", "horizontal left unit", (B.slabel(a),))
        if H[(a, B.sq_hor_identity[B.right[a]])] != a:
            rep.add("axiom", "horizontal right unit", (B.slabel(a),))
        if V[(B.sq_ver_identity[B.top[a]], a)] != a:
            rep.add("axiom", "vertical top unit", (B.slabel(a),))
        if V[(a, B.sq_ver_identity[B.bottom[a]])] != a:
            rep.add("axiom", "vertical bottom unit", (B.slabel(a),))
    for a in B.squares:
        for b in by_left.get(B.right[a], ()):
            ab = H[(a, b)]
            for c in by_left.get(B.right[b], ()):
                rep.checked += 1
                if H[(ab, c)] != H[(a, H[(b, c)])]:
                    rep.add("axiom", "horizontal associativity", (B.slabel(a), B.slabel(b), B.slabel(c)))
        for b in by_top.get(B.bottom[a], ()):
            ab = V[(a, b)]
            for c in by_top.get(B.bottom[b], ()):
                rep.checked += 1
                if V[(ab, c)] != V[(a, V[(b, c)])]:
                    rep.add("axiom", "vertical associativity", (B.slabel(a), B.slabel(b), B.slabel(c)))
    for a in B.squares:
        for b in by_left.get(B.right[a], ()):
            for c in by_top.get(B.bottom[a], ()):
                for d in by_top.get(B.bottom[b], ()):
                    if B.left[d] != B.right[c]:
                        continue
                    rep.checked += 1
                    if V[(H[(a, b)], H[(c, d)])] != H[(V[(a, c)], V[(b, d)])]:
                        rep.add("axiom", "interchange",
                                (B.slabel(a), B.slabel(b), B.slabel(c), B.slabel(d)))
    for (g, f), gf in B.hor_comp.items():
        rep.checked += 1
        if H[(B.sq_ver_identity[f], B.sq_ver_identity[g])] != B.sq_ver_identity[gf]:
            rep.add("axiom", "e_f|e_g = e_(gf)", (B.hlabel(f), B.hlabel(g)))
    for (psi, phi), comp in B.ver_comp.items():
        rep.checked += 1
        if V[(B.sq_hor_identity[phi], B.sq_hor_identity[psi])] != B.sq_hor_identity[comp]:
            rep.add("axiom", "id_φ over id_ψ = id_(ψφ)", (B.vlabel(phi), B.vlabel(psi)))
    for x in B.objects:
        rep.checked += 1
        if B.sq_ver_identity[B.hor_identity[x]] != B.sq_hor_identity[B.ver_identity[x]]:
            rep.add("axiom", "e_(id_x) = id_(e_x)", (str(B.obj_labels[x]),))
    return rep
