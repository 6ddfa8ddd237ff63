"""Finite categories, functors and natural transformations as explicit tables.

Objects and morphisms are the integers ``0..n-1``; labels are only used
for reporting.  Composition is stored densely as a dict keyed by
``(g, f)`` meaning ``g∘f`` (``f`` first).
"""

from __future__ import annotations

from collections.abc import Callable, Hashable, Mapping, Sequence
from functools import cached_property

from ..errors import CompositionError, StructuralError
from .report import ValidationReport


class FiniteCategory:
    def __init__(
        self,
        obj_labels: Sequence,
        mor_labels: Sequence,
        src: Sequence[int],
        tgt: Sequence[int],
        identity: Sequence[int],
        table: Mapping[tuple[int, int], int],
        name: str = "",
    ):
        if not (len(mor_labels) == len(src) == len(tgt)):
            raise StructuralError("morphism label/src/tgt lengths differ")
        if len(identity) != len(obj_labels):
            raise StructuralError("identity map must cover every object")
        self.obj_labels = tuple(obj_labels)
        self.mor_labels = tuple(mor_labels)
        self.src = tuple(src)
        self.tgt = tuple(tgt)
        self.identity = tuple(identity)
        self.table = dict(table)
        self.name = name

    @classmethod
    def build(
        cls,
        obj_keys: Sequence[Hashable],
        mor_keys: Sequence[Hashable],
        src: Sequence[int],
        tgt: Sequence[int],
        identity: Sequence[int],
        compose: Callable[[int, int], Hashable],
        name: str = "",
    ) -> "FiniteCategory":
        """Tabulate ``compose`` (returning a morphism *key*) over all composable pairs."""
        index = {k: i for i, k in enumerate(mor_keys)}
        out: dict[int, list[int]] = {a: [] for a in range(len(obj_keys))}
        for m, s in enumerate(src):
            out[s].append(m)
        table = {}
        for f in range(len(mor_keys)):
            for g in out[tgt[f]]:
                key = compose(g, f)
                try:
                    table[(g, f)] = index[key]
                except KeyError:
                    raise StructuralError(f"composite {key!r} is not a morphism", [key]) from None
        return cls(obj_keys, mor_keys, src, tgt, identity, table, name=name)

    @property
    def n_objects(self) -> int:
        return len(self.obj_labels)

    @property
    def n_morphisms(self) -> int:
        return len(self.mor_labels)

    @property
    def objects(self) -> range:
        return range(self.n_objects)

    @property
    def morphisms(self) -> range:
        return range(self.n_morphisms)

    def label(self, m: int) -> str:
        return str(self.mor_labels[m])

    def obj_label(self, a: int) -> str:
        return str(self.obj_labels[a])

    @cached_property
    def outgoing(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in self.objects]
        for m in self.morphisms:
            out[self.src[m]].append(m)
        return tuple(tuple(o) for o in out)

    @cached_property
    def incoming(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in self.objects]
        for m in self.morphisms:
            inc[self.tgt[m]].append(m)
        return tuple(tuple(i) for i in inc)

    def hom(self, a: int, b: int) -> list[int]:
        return [m for m in self.outgoing[a] if self.tgt[m] == b]

    def compose(self, g: int, f: int) -> int:
        """Return ``g∘f``."""
        try:
            return self.table[(g, f)]
        except KeyError:
            raise CompositionError(
                f"cannot compose {self.label(g)}∘{self.label(f)}: "
                f"target of {self.label(f)} is {self.obj_label(self.tgt[f])}, "
                f"source of {self.label(g)} is {self.obj_label(self.src[g])}"
            ) from None

    def compose_path(self, *ms: int) -> int:
        """Compose ``ms[0]`` first, then ``ms[1]``, ... (diagrammatic order)."""
        acc = ms[0]
        for m in ms[1:]:
            acc = self.compose(m, acc)
        return acc

    def is_identity(self, m: int) -> bool:
        return self.identity[self.src[m]] == m

    def __repr__(self) -> str:
        return f"FiniteCategory({self.name!r}, {self.n_objects} objects, {self.n_morphisms} morphisms)"


class FiniteFunctor:
    def __init__(self, source: FiniteCategory, target: FiniteCategory,
                 obj_map: Sequence[int], mor_map: Sequence[int], name: str = ""):
        self.source = source
        self.target = target
        self.obj_map = tuple(obj_map)
        self.mor_map = tuple(mor_map)
        self.name = name

    @classmethod
    def identity(cls, cat: FiniteCategory) -> "FiniteFunctor":
        return cls(cat, cat, cat.objects, cat.morphisms, name=f"Id[{cat.name}]")

    def __call__(self, m: int) -> int:
        return self.mor_map[m]

    def on_object(self, a: int) -> int:
        return self.obj_map[a]

    def then(self, other: "FiniteFunctor") -> "FiniteFunctor":
        """``other∘self``."""
        if other.source is not self.target:
            raise CompositionError(f"functor {other.name} does not start where {self.name} ends")
        return FiniteFunctor(
            self.source, other.target,
            [other.obj_map[self.obj_map[a]] for a in self.source.objects],
            [other.mor_map[self.mor_map[m]] for m in self.source.morphisms],
            name=f"{other.name}∘{self.name}",
        )

    def same_as(self, other: "FiniteFunctor") -> bool:
        return (self.source is other.source and self.target is other.target
                and self.obj_map == other.obj_map and self.mor_map == other.mor_map)

    def __repr__(self) -> str:
        return f"FiniteFunctor({self.name!r})"


class FiniteNatTrans:
    """Components indexed by the objects of the common source category."""

    def __init__(self, source: FiniteFunctor, target: FiniteFunctor,
                 components: Sequence[int], name: str = ""):
        self.source = source
        self.target = target
        self.components = tuple(components)
        self.name = name

    @classmethod
    def identity(cls, functor: FiniteFunctor) -> "FiniteNatTrans":
        cat = functor.target
        return cls(functor, functor,
                   [cat.identity[functor.obj_map[a]] for a in functor.source.objects],
                   name=f"id[{functor.name}]")

    def __getitem__(self, a: int) -> int:
        return self.components[a]

    def then(self, other: "FiniteNatTrans") -> "FiniteNatTrans":
        """Vertical composite ``other∘self``."""
        cat = self.source.target
        return FiniteNatTrans(
            self.source, other.target,
            [cat.compose(other.components[a], self.components[a]) for a in self.source.source.objects],
            name=f"{other.name}∘{self.name}",
        )

    def same_as(self, other: "FiniteNatTrans") -> bool:
        return self.components == other.components


def validate_category(cat: FiniteCategory) -> ValidationReport:
    rep = ValidationReport(f"category {cat.name}")
    n_obj, n_mor = cat.n_objects, cat.n_morphisms
    for m in cat.morphisms:
        for end, val in (("src", cat.src[m]), ("tgt", cat.tgt[m])):
            if not 0 <= val < n_obj:
                rep.add("structural", f"dangling {end}", (cat.label(m), val))
    for a, i in enumerate(cat.identity):
        if not 0 <= i < n_mor or cat.src[i] != a or cat.tgt[i] != a:
            rep.add("structural", "identity not an endomorphism", (cat.obj_label(a), i))
    if not rep.ok:
        return rep
    for f in cat.morphisms:
        for g in cat.outgoing[cat.tgt[f]]:
            rep.checked += 1
            h = cat.table.get((g, f))
            if h is None:
                rep.add("structural", "missing composite", (cat.label(g), cat.label(f)))
            elif not 0 <= h < n_mor or cat.src[h] != cat.src[f] or cat.tgt[h] != cat.tgt[g]:
                rep.add("structural", "composite has wrong boundary", (cat.label(g), cat.label(f), h))
    for (g, f) in cat.table:
        if not (0 <= f < n_mor and 0 <= g < n_mor) or cat.tgt[f] != cat.src[g]:
            rep.add("structural", "composite of non-composable pair", (g, f))
    if not rep.ok:
        return rep
    comp = cat.table
    for f in cat.morphisms:
        rep.checked += 2
        if comp[(f, cat.identity[cat.src[f]])] != f:
            rep.add("axiom", "right unit", (cat.label(f),))
        if comp[(cat.identity[cat.tgt[f]], f)] != f:
            rep.add("axiom", "left unit", (cat.label(f),))
    for f in cat.morphisms:
        for g in cat.outgoing[cat.tgt[f]]:
            gf = comp[(g, f)]
            for h in cat.outgoing[cat.tgt[g]]:
                rep.checked += 1
                if comp[(h, gf)] != comp[(comp[(h, g)], f)]:
                    rep.add("axiom", "associativity", (cat.label(h), cat.label(g), cat.label(f)))
    return rep


def validate_functor(fun: FiniteFunctor) -> ValidationReport:
    rep = ValidationReport(f"functor {fun.name}")
    A, B = fun.source, fun.target
    if len(fun.obj_map) != A.n_objects or len(fun.mor_map) != A.n_morphisms:
        rep.add("structural", "functor map not total", (fun.name,))
        return rep
    for a in A.objects:
        if not 0 <= fun.obj_map[a] < B.n_objects:
            rep.add("structural", "object image out of range", (A.obj_label(a),))
    for m in A.morphisms:
        if not 0 <= fun.mor_map[m] < B.n_morphisms:
            rep.add("structural", "morphism image out of range", (A.label(m),))
    if not rep.ok:
        return rep
    for m in A.morphisms:
        rep.checked += 1
        fm = fun.mor_map[m]
        if B.src[fm] != fun.obj_map[A.src[m]] or B.tgt[fm] != fun.obj_map[A.tgt[m]]:
            rep.add("axiom", "preserves boundaries", (A.label(m),))
    for a in A.objects:
        rep.checked += 1
        if fun.mor_map[A.identity[a]] != B.identity[fun.obj_map[a]]:
            rep.add("axiom", "preserves identities", (A.obj_label(a),))
    if not rep.ok:
        return rep
    for (g, f), gf in A.table.items():
        rep.checked += 1
        if fun.mor_map[gf] != B.table[(fun.mor_map[g], fun.mor_map[f])]:
            rep.add("axiom", "preserves composition", (A.label(g), A.label(f)))
    return rep


def validate_nat_trans(eta: FiniteNatTrans) -> ValidationReport:
    rep = ValidationReport(f"transformation {eta.name}")
    F, G = eta.source, eta.target
    if F.source is not G.source or F.target is not G.target:
        rep.add("structural", "functors not parallel", (F.name, G.name))
        return rep
    A, B = F.source, F.target
    if len(eta.components) != A.n_objects:
        rep.add("structural", "missing component", (eta.name,))
        return rep
    for a in A.objects:
        c = eta.components[a]
        if not 0 <= c < B.n_morphisms or B.src[c] != F.obj_map[a] or B.tgt[c] != G.obj_map[a]:
            rep.add("structural", "component has wrong boundary", (A.obj_label(a),))
    if not rep.ok:
        return rep
    for m in A.morphisms:
        rep.checked += 1
        a, b = A.src[m], A.tgt[m]
        if B.compose(G(m), eta[a]) != B.compose(eta[b], F(m)):
            rep.add("axiom", "naturality", (A.label(m),))
    return rep
