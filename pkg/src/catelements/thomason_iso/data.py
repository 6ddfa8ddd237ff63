"""Simplex data of the two bar constructions and the maps Φ and Θ between them.

Index conventions, shared by every function in this package.  A bar
``p``-simplex is ``(t_0, ..., t_p)`` with ``t_j`` in ``X_{j,q}``, ``q = p - j``.

* Columns are indexed by ``m``: bar vertex ``h`` of ``t_j`` is ``m = p - h``,
  so column ``b`` (1-based, running from vertex ``b-1`` to ``b``) holds the
  cells with lower index ``m = p - b + 1``.
* Rows are indexed by ``n``: row ``r`` of ``t_j`` (0 = top) is ``n = q - r``.

Two-side data (bar of the nerve of ∫F):

* objects ``(c_m, x_m)`` for ``0 ≤ m ≤ p``;
* morphisms ``(f_m^n, φ_m^n): (c_m, x_m) → (c_{m-1}, x_{m-1})`` for ``n < m``;
* 2-cells ``α_m^n: (f_m^{n+1}, φ_m^{n+1}) ⇒ (f_m^n, φ_m^n)`` for ``n < m - 1``,
  so ``φ_m^n = (Fα_m^n)_{x_{m-1}}∘φ_m^{n+1}``.

Double-side data (bar of the nerve of ∬F):

* objects ``(c_m, x_m^n)`` for ``n ≤ m``;
* horizontals ``f_m^n: (c_m, x_m^n) → (c_{m-1}, x_{m-1}^n)`` for ``n < m``;
* verticals ``φ_m^n: (c_m, x_m^{n+1}) → (c_m, x_m^n)`` for ``n < m``;
* squares ``α_m^n`` with top ``f_m^{n+1}``, bottom ``f_m^n``, left ``φ_m^n``
  and right ``φ_{m-1}^n`` for ``n < m - 1``.

All entries are stored as IDs of cells of ∫F or ∬F.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..bar import BarConstruction, bar_construction
from ..category_core import TwoFunctorToCat
from ..elements import (ElementsDoubleCategory, ElementsTwoCategory, double_category_of_elements,
                        two_category_of_elements)
from ..errors import StructuralError
from ..nerves import NerveOfSimplicialCategory, nerve_double_category, nerve_two_category
from ..simplicial import DEFAULT_MAX_DIM


@dataclass
class TwoSideSimplexData:
    p: int
    objects: dict[int, int] = field(default_factory=dict)
    morphisms: dict[tuple[int, int], int] = field(default_factory=dict)
    cells: dict[tuple[int, int], int] = field(default_factory=dict)


@dataclass
class DoubleSideSimplexData:
    p: int
    objects: dict[tuple[int, int], int] = field(default_factory=dict)
    horizontals: dict[tuple[int, int], int] = field(default_factory=dict)
    verticals: dict[tuple[int, int], int] = field(default_factory=dict)
    squares: dict[tuple[int, int], int] = field(default_factory=dict)


def _put(table: dict, key, value, what: str) -> None:
    old = table.setdefault(key, value)
    if old != value:
        raise StructuralError(f"{what} {key} occurs with two different values ({old} and {value})",
                              [what, key])


class BarPair:
    """∫F, ∬F, their bisimplicial nerves and both bar constructions up to ``D``."""

    def __init__(self, F: TwoFunctorToCat, D: int = DEFAULT_MAX_DIM):
        self.F = F
        self.C = F.source
        self.D = D
        self.E: ElementsTwoCategory = two_category_of_elements(F)
        self.B: ElementsDoubleCategory = double_category_of_elements(F)
        self.X2: NerveOfSimplicialCategory = nerve_two_category(self.E, D)
        self.Xd: NerveOfSimplicialCategory = nerve_double_category(self.B, D)
        self.W2: BarConstruction = bar_construction(self.X2, D)
        self.Wd: BarConstruction = bar_construction(self.Xd, D)

    # -- two side ------------------------------------------------------------

    def encode_two_side(self, p: int, simplex: int) -> TwoSideSimplexData:
        """Read the data of a bar ``p``-simplex, checking every repeated occurrence agrees."""
        E, row = self.E, self.W2.rows[p][simplex]
        t = TwoSideSimplexData(p)
        for j in range(p + 1):
            q = p - j
            obj0, cols = self.X2.decode(j, q, int(row[j]))
            _put(t.objects, p, obj0, "object")
            for b, (f0, alphas) in enumerate(cols, start=1):
                m = p - b + 1
                _put(t.morphisms, (m, q), f0, "morphism")
                _put(t.objects, m - 1, E.tgt1[f0], "object")
                for r, a in enumerate(alphas, start=1):
                    _put(t.cells, (m, q - r), a, "2-cell")
                    _put(t.morphisms, (m, q - r), E.tgt2[a], "morphism")
        return t

    def two_side_violations(self, t: TwoSideSimplexData) -> list[str]:
        """Boundary conditions of the data; an empty list means the data is well formed."""
        E, p, out = self.E, t.p, []
        if set(t.objects) != set(range(p + 1)):
            out.append("objects must be indexed by 0..p")
        for m in range(1, p + 1):
            for n in range(m):
                u = t.morphisms.get((m, n))
                if u is None:
                    out.append(f"morphism ({m},{n}) missing")
                elif (E.src1[u], E.tgt1[u]) != (t.objects.get(m), t.objects.get(m - 1)):
                    out.append(f"morphism ({m},{n}) has the wrong endpoints")
            for n in range(m - 1):
                a = t.cells.get((m, n))
                if a is None:
                    out.append(f"2-cell ({m},{n}) missing")
                elif (E.src2[a], E.tgt2[a]) != (t.morphisms.get((m, n + 1)), t.morphisms.get((m, n))):
                    out.append(f"2-cell ({m},{n}) violates the triangle condition")
        return out

    def decode_two_side(self, t: TwoSideSimplexData) -> int:
        """The bar simplex ID carrying ``t``."""
        bad = self.two_side_violations(t)
        if bad:
            raise StructuralError("; ".join(bad), bad)
        p, entries = t.p, []
        for j in range(p + 1):
            q = p - j
            cols = []
            for b in range(1, j + 1):
                m = p - b + 1
                cols.append((t.morphisms[(m, q)], tuple(t.cells[(m, q - r)] for r in range(1, q + 1))))
            entries.append(self.X2.encode(j, q, t.objects[p], cols))
        return self.W2.lookup_row(p, entries)

    # -- double side ---------------------------------------------------------

    def encode_double_side(self, p: int, simplex: int) -> DoubleSideSimplexData:
        B, row = self.B, self.Wd.rows[p][simplex]
        u = DoubleSideSimplexData(p)
        for j in range(p + 1):
            q = p - j
            (o, vs), cols = self.Xd.decode(j, q, int(row[j]))
            _put(u.objects, (p, q), o, "object")
            for r, v in enumerate(vs, start=1):
                _put(u.verticals, (p, q - r), v, "vertical")
                _put(u.objects, (p, q - r), B.vtgt[v], "object")
            for b, (h0, ss) in enumerate(cols, start=1):
                m = p - b + 1
                _put(u.horizontals, (m, q), h0, "horizontal")
                _put(u.objects, (m - 1, q), B.htgt[h0], "object")
                for r, s in enumerate(ss, start=1):
                    _put(u.squares, (m, q - r), s, "square")
                    _put(u.horizontals, (m, q - r), B.bottom[s], "horizontal")
                    _put(u.verticals, (m - 1, q - r), B.right[s], "vertical")
                    _put(u.objects, (m - 1, q - r), B.vtgt[B.right[s]], "object")
        return u

    def double_side_violations(self, u: DoubleSideSimplexData) -> list[str]:
        B, p, out = self.B, u.p, []
        obj = u.objects
        if set(obj) != {(m, n) for m in range(p + 1) for n in range(m + 1)}:
            out.append("objects must be indexed by 0 ≤ n ≤ m ≤ p")
        for m in range(1, p + 1):
            for n in range(m):
                h, v = u.horizontals.get((m, n)), u.verticals.get((m, n))
                if h is None or v is None:
                    out.append(f"horizontal or vertical ({m},{n}) missing")
                    continue
                if (B.hsrc[h], B.htgt[h]) != (obj.get((m, n)), obj.get((m - 1, n))):
                    out.append(f"horizontal ({m},{n}) has the wrong endpoints")
                if (B.vsrc[v], B.vtgt[v]) != (obj.get((m, n + 1)), obj.get((m, n))):
                    out.append(f"vertical ({m},{n}) has the wrong endpoints")
            for n in range(m - 1):
                s = u.squares.get((m, n))
                want = (u.horizontals.get((m, n + 1)), u.horizontals.get((m, n)),
                        u.verticals.get((m, n)), u.verticals.get((m - 1, n)))
                if s is None:
                    out.append(f"square ({m},{n}) missing")
                elif (B.top[s], B.bottom[s], B.left[s], B.right[s]) != want:
                    out.append(f"square ({m},{n}) has the wrong boundary")
        return out

    def decode_double_side(self, u: DoubleSideSimplexData) -> int:
        bad = self.double_side_violations(u)
        if bad:
            raise StructuralError("; ".join(bad), bad)
        p, entries = u.p, []
        for j in range(p + 1):
            q = p - j
            obj = (u.objects[(p, q)], tuple(u.verticals[(p, q - r)] for r in range(1, q + 1)))
            cols = []
            for b in range(1, j + 1):
                m = p - b + 1
                cols.append((u.horizontals[(m, q)], tuple(u.squares[(m, q - r)] for r in range(1, q + 1))))
            entries.append(self.Xd.encode(j, q, obj, cols))
        return self.Wd.lookup_row(p, entries)

    # -- the two maps --------------------------------------------------------

    def _push_chain(self, fs: list[int], x: int) -> int:
        """``Ff_k(...Ff_1(x))`` for ``fs = [f_1, ..., f_k]``."""
        for f in fs:
            x = self.F.push_object(f, x)
        return x

    def phi(self, t: TwoSideSimplexData) -> DoubleSideSimplexData:
        """Corners and squares from morphisms and 2-cells."""
        F, C, E, B, p = self.F, self.C, self.E, self.B, t.p
        c = {m: E.obj_keys[t.objects[m]][0] for m in range(p + 1)}
        x = {m: E.obj_keys[t.objects[m]][1] for m in range(p + 1)}
        f = {k: E.cell1_keys[u][0] for k, u in t.morphisms.items()}
        top = {m: E.cell1_keys[t.morphisms[(m, m - 1)]][1] for m in range(1, p + 1)}
        alpha = {k: E.cell2_keys[a][0] for k, a in t.cells.items()}

        xx: dict[tuple[int, int], int] = {}
        for n in range(p + 1):
            xx[(n, n)] = x[n]
            for m in range(n + 1, p + 1):
                xx[(m, n)] = F.push_object(f[(m, n)], xx[(m - 1, n)])
        vphi: dict[tuple[int, int], int] = {}
        for m in range(1, p + 1):
            vphi[(m, m - 1)] = top[m]
            for n in range(m - 1):
                v = top[n + 1]
                for k in range(n + 2, m + 1):
                    v = F.push_morphism(f[(k, n)], v)
                pasted = C.paste_chain([alpha[(k, n)] for k in range(m, n + 1, -1)])
                vphi[(m, n)] = F.category(c[m]).compose(v, F.component(pasted, x[n + 1]))

        u = DoubleSideSimplexData(p)
        u.objects = {k: B.obj_index[(c[k[0]], y)] for k, y in xx.items()}
        u.horizontals = {(m, n): B.hor_index[(f[(m, n)], xx[(m - 1, n)])] for (m, n) in t.morphisms}
        u.verticals = {(m, n): B.ver_index[(c[m], v)] for (m, n), v in vphi.items()}
        u.squares = {(m, n): B.sq_index[(alpha[(m, n)], vphi[(m - 1, n)])] for (m, n) in t.cells}
        return u

    def theta(self, u: DoubleSideSimplexData) -> TwoSideSimplexData:
        """Morphisms and 2-cells from corners and squares."""
        F, C, E, B, p = self.F, self.C, self.E, self.B, u.p
        c = {m: B.obj_keys[u.objects[(m, m)]][0] for m in range(p + 1)}
        xx = {k: B.obj_keys[o][1] for k, o in u.objects.items()}
        f = {k: B.hor_keys[h][0] for k, h in u.horizontals.items()}
        vphi = {k: B.ver_keys[v][1] for k, v in u.verticals.items()}
        alpha = {k: B.sq_keys[s][0] for k, s in u.squares.items()}

        t = TwoSideSimplexData(p)
        t.objects = {m: E.obj_index[(c[m], xx[(m, m)])] for m in range(p + 1)}
        for m in range(1, p + 1):
            base = xx[(m - 1, m - 1)]
            t.morphisms[(m, m - 1)] = E.cell1_index[(f[(m, m - 1)], vphi[(m, m - 1)], base)]
            for n in range(m - 1):
                chain = C.vertical_chain([alpha[(m, k)] for k in range(m - 2, n - 1, -1)])
                second = F.category(c[m]).compose(F.component(chain, base), vphi[(m, m - 1)])
                t.morphisms[(m, n)] = E.cell1_index[(f[(m, n)], second, base)]
        for (m, n), a in alpha.items():
            t.cells[(m, n)] = E.cell2_index[(a, t.morphisms[(m, n + 1)])]
        return t
