"""Nerves of categories, 2-categories and double categories.

Every bisimplicial nerve here is produced by one engine: a *simplicial
category* (a category ``A_n`` for each vertical degree ``n`` with face and
degeneracy functors between them) becomes the bisimplicial set
``X_{m,n} = N_m(A_n)``.  Horizontal operators are the nerve operators of
each ``A_n``; vertical operators apply the functors entrywise.

A nerve ``m``-simplex of a category is stored as the flat tuple
``(a_0, g_1, ..., g_m)``: the first object followed by the composable
morphisms.  ``d_0`` drops ``g_1``, ``d_m`` drops ``g_m``, inner ``d_i``
replaces ``g_i, g_{i+1}`` by ``g_{i+1}∘g_i`` and ``s_i`` inserts the
identity on the ``i``-th object.

Orientation used for all bisimplicial nerves: ``m`` is horizontal, ``n``
vertical, vertex 0 of a vertical chain is the top row.

* 2-category ``A``: ``A_n`` has the objects of ``A``; its morphisms are
  columns ``(f_0, (α_1, ..., α_n))``: a 1-cell followed by ``n``
  vertically composable 2-cells listed top to bottom.
* double category ``B``: objects of ``B_n`` are vertical chains
  ``(o, (v_1, ..., v_n))`` and morphisms are columns of stacked squares
  ``(h_0, (s_1, ..., s_n))`` with ``h_0`` the top horizontal morphism.
"""

from __future__ import annotations

from collections.abc import Callable, Hashable, Sequence

import numpy as np

from .category_core import (DoubleCategoryData, FiniteCategory, FiniteFunctor, FiniteTwoCategory,
                            ValidationReport, validate_category, validate_functor)
from .errors import StructuralError
from .simplicial import (DEFAULT_MAX_DIM, TruncatedBisimplicialSet, TruncatedSimplicialSet,
                         check_level_size)


class KeyedCategory(FiniteCategory):
    """A finite category whose objects and morphisms are labelled by hashable keys."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.obj_index = {k: i for i, k in enumerate(self.obj_labels)}
        self.mor_index = {k: i for i, k in enumerate(self.mor_labels)}

    @classmethod
    def from_keys(cls, obj_keys: Sequence[Hashable], mor_keys: Sequence[Hashable],
                  src: Callable[[Hashable], Hashable], tgt: Callable[[Hashable], Hashable],
                  identity: Callable[[Hashable], Hashable],
                  compose: Callable[[Hashable, Hashable], Hashable], name: str = "") -> "KeyedCategory":
        check_level_size(len(mor_keys), f"category {name}")
        oidx = {k: i for i, k in enumerate(obj_keys)}
        midx = {k: i for i, k in enumerate(mor_keys)}
        if len(oidx) != len(obj_keys) or len(midx) != len(mor_keys):
            raise StructuralError(f"duplicate keys while building {name}")

        def look(table, key, what):
            try:
                return table[key]
            except KeyError:
                raise StructuralError(f"{what} {key!r} missing from {name}", [key]) from None

        s = [look(oidx, src(k), "object") for k in mor_keys]
        t = [look(oidx, tgt(k), "object") for k in mor_keys]
        ident = [look(midx, identity(k), "identity") for k in obj_keys]
        out: list[list[int]] = [[] for _ in obj_keys]
        for m, a in enumerate(s):
            out[a].append(m)
        table = {}
        for f, fk in enumerate(mor_keys):
            for g in out[t[f]]:
                table[(g, f)] = look(midx, compose(mor_keys[g], fk), "composite")
        return cls(list(obj_keys), list(mor_keys), s, t, ident, table, name=name)

    def functor_to(self, target: "KeyedCategory", on_obj: Callable, on_mor: Callable,
                   name: str = "") -> FiniteFunctor:
        try:
            omap = [target.obj_index[on_obj(k)] for k in self.obj_labels]
            mmap = [target.mor_index[on_mor(k)] for k in self.mor_labels]
        except KeyError as exc:
            raise StructuralError(f"functor {name} leaves {target.name}: {exc.args[0]!r}") from None
        return FiniteFunctor(self, target, omap, mmap, name=name)


class SimplicialCategory:
    """Categories ``cats[n]`` with ``faces[n][i]: cats[n] → cats[n-1]`` and
    ``degeneracies[n][i]: cats[n] → cats[n+1]`` (absent at the top level)."""

    def __init__(self, cats: Sequence[FiniteCategory], faces: Sequence[Sequence[FiniteFunctor]],
                 degeneracies: Sequence[Sequence[FiniteFunctor]], name: str = ""):
        self.cats = list(cats)
        self.faces = [list(f) for f in faces]
        self.degeneracies = [list(s) for s in degeneracies]
        self.name = name

    @property
    def max_dim(self) -> int:
        return len(self.cats) - 1


def validate_simplicial_category(S: SimplicialCategory) -> ValidationReport:
    """Each level is a category, each operator a functor, and the simplicial
    identities hold as equalities of functors."""
    rep = ValidationReport(f"simplicial category {S.name}")
    D = S.max_dim
    for n, cat in enumerate(S.cats):
        rep.extend(validate_category(cat), prefix=f"level {n}: ")
    for n in range(D + 1):
        for i, fun in enumerate(S.faces[n]):
            rep.extend(validate_functor(fun), prefix=f"d_{i} on level {n}: ")
        for i, fun in enumerate(S.degeneracies[n]):
            rep.extend(validate_functor(fun), prefix=f"s_{i} on level {n}: ")
    if not rep.ok:
        return rep
    d, s = S.faces, S.degeneracies

    def same(a: FiniteFunctor, b: FiniteFunctor, rule: str, where: tuple) -> None:
        rep.checked += 1
        if not a.same_as(b):
            rep.add("identity", rule, where)

    for k in range(2, D + 1):
        for j in range(1, k + 1):
            for i in range(j):
                same(d[k][j].then(d[k - 1][i]), d[k][i].then(d[k - 1][j - 1]),
                     f"d_{i} d_{j} = d_{j - 1} d_{i}", (k, i, j))
    for k in range(D):
        ident = FiniteFunctor.identity(S.cats[k])
        for j in range(k + 1):
            for i in range(k + 2):
                lhs = s[k][j].then(d[k + 1][i])
                if i < j:
                    same(lhs, d[k][i].then(s[k - 1][j - 1]), f"d_{i} s_{j} = s_{j - 1} d_{i}", (k, i, j))
                elif i in (j, j + 1):
                    same(lhs, ident, f"d_{i} s_{j} = id", (k, i, j))
                else:
                    same(lhs, d[k][i - 1].then(s[k - 1][j]), f"d_{i} s_{j} = s_{j} d_{i - 1}", (k, i, j))
        if k + 1 < D:
            for j in range(k + 1):
                for i in range(j + 1):
                    same(s[k][j].then(s[k + 1][i]), s[k][i].then(s[k + 1][j + 1]),
                         f"s_{i} s_{j} = s_{j + 1} s_{i}", (k, i, j))
        else:
            rep.skipped += (k + 1) * (k + 2) // 2
    return rep


# -- nerve of a single category ----------------------------------------------

class RowIndex:
    """Lookup of lexicographically sorted integer rows."""

    def __init__(self, rows: np.ndarray, base: int):
        self.rows = rows
        self.width = rows.shape[1]
        self.base = max(base, 1)
        self.fits = self.base ** self.width < 2 ** 62
        if self.fits:
            self.keys = self._keys(rows)
        else:
            self.table = {tuple(r): i for i, r in enumerate(rows.tolist())}

    def _keys(self, rows: np.ndarray) -> np.ndarray:
        k = np.zeros(rows.shape[0], dtype=np.int64)
        for c in range(self.width):
            k = k * self.base + rows[:, c]
        return k

    def lookup(self, rows: np.ndarray) -> np.ndarray:
        if self.fits:
            q = self._keys(rows)
            if len(q) and not len(self.keys):
                raise StructuralError(f"row {rows[0].tolist()} is not a simplex", [rows[0].tolist()])
            pos = np.searchsorted(self.keys, q)
            pos = np.minimum(pos, len(self.keys) - 1)
            if len(q) and not np.array_equal(self.keys[pos], q):
                bad = int(np.flatnonzero(self.keys[pos] != q)[0])
                raise StructuralError(f"row {rows[bad].tolist()} is not a simplex", [rows[bad].tolist()])
            return pos
        out = np.empty(rows.shape[0], dtype=np.int64)
        for j, r in enumerate(rows.tolist()):
            try:
                out[j] = self.table[tuple(r)]
            except KeyError:
                raise StructuralError(f"row {r} is not a simplex", [r]) from None
        return out


class CategoryNerveTables:
    """Chains of a category up to length ``D`` as sorted integer arrays plus operator tables."""

    def __init__(self, cat: FiniteCategory, D: int):
        self.cat = cat
        self.D = D
        n_mor = cat.n_morphisms
        self.src = np.asarray(cat.src, dtype=np.int64)
        self.tgt = np.asarray(cat.tgt, dtype=np.int64)
        self.identity = np.asarray(cat.identity, dtype=np.int64)
        comp = np.full((max(n_mor, 1), max(n_mor, 1)), -1, dtype=np.int64)
        for (g, f), gf in cat.table.items():
            comp[g, f] = gf
        self.comp = comp
        order = np.argsort(self.src, kind="stable")
        self.out_order = order
        self.out_start = np.searchsorted(self.src[order], np.arange(cat.n_objects + 1))
        base = max(cat.n_objects, n_mor)
        self.rows: list[np.ndarray] = [np.arange(cat.n_objects, dtype=np.int64).reshape(-1, 1)]
        for k in range(1, D + 1):
            self.rows.append(self._extend(self.rows[-1], k))
        self.index = [RowIndex(r, base) for r in self.rows]

    def _last_object(self, rows: np.ndarray) -> np.ndarray:
        if rows.shape[1] == 1:
            return rows[:, 0]
        return self.tgt[rows[:, -1]]

    def _extend(self, rows: np.ndarray, k: int) -> np.ndarray:
        last = self._last_object(rows)
        counts = self.out_start[last + 1] - self.out_start[last]
        total = int(counts.sum())
        check_level_size(total, f"nerve level {k} of {self.cat.name}")
        parent = np.repeat(np.arange(rows.shape[0]), counts)
        first = np.repeat(self.out_start[last], counts)
        offset = np.arange(total) - np.repeat(np.cumsum(counts) - counts, counts)
        new_col = self.out_order[first + offset]
        return np.hstack([rows[parent], new_col.reshape(-1, 1)])

    def face_rows(self, k: int, i: int) -> np.ndarray:
        R = self.rows[k]
        if i == 0:
            return np.hstack([self.tgt[R[:, 1]].reshape(-1, 1), R[:, 2:]])
        if i == k:
            return R[:, :k]
        composite = self.comp[R[:, i + 1], R[:, i]].reshape(-1, 1)
        return np.hstack([R[:, :i], composite, R[:, i + 2:]])

    def degeneracy_rows(self, k: int, i: int) -> np.ndarray:
        R = self.rows[k]
        obj = R[:, 0] if i == 0 else self.tgt[R[:, i]]
        return np.hstack([R[:, :i + 1], self.identity[obj].reshape(-1, 1), R[:, i + 1:]])

    def face_table(self, k: int) -> np.ndarray:
        n = self.rows[k].shape[0]
        if k == 0:
            return np.zeros((0, n), dtype=np.int64)
        return np.stack([self.index[k - 1].lookup(self.face_rows(k, i)) for i in range(k + 1)])

    def degeneracy_table(self, k: int) -> np.ndarray:
        n = self.rows[k].shape[0]
        if k == self.D:
            return np.zeros((0, n), dtype=np.int64)
        return np.stack([self.index[k + 1].lookup(self.degeneracy_rows(k, i)) for i in range(k + 1)])

    def apply(self, k: int, fun: FiniteFunctor) -> np.ndarray:
        """Push every ``k``-chain through ``fun`` (rows of the target nerve)."""
        R = self.rows[k]
        out = np.empty_like(R)
        out[:, 0] = np.asarray(fun.obj_map, dtype=np.int64)[R[:, 0]]
        if k:
            out[:, 1:] = np.asarray(fun.mor_map, dtype=np.int64)[R[:, 1:]]
        return out


def _as_tuples(rows: np.ndarray) -> list[tuple]:
    return [tuple(r) for r in rows.tolist()]


def nerve_category(A: FiniteCategory, D: int = DEFAULT_MAX_DIM) -> TruncatedSimplicialSet:
    """Level ``k`` holds the composable ``k``-chains ``(a_0, g_1, ..., g_k)``."""
    T = CategoryNerveTables(A, D)
    out = TruncatedSimplicialSet([_as_tuples(T.rows[k]) for k in range(D + 1)],
                                 [T.face_table(k) for k in range(D + 1)],
                                 [T.degeneracy_table(k) for k in range(D + 1)], name=f"N{A.name}")
    out.rows = T.rows
    return out


# -- simplicial category → bisimplicial set ----------------------------------

class NerveOfSimplicialCategory(TruncatedBisimplicialSet):
    """Bisimplicial set ``N_m(A_n)`` keeping the level categories and chain arrays."""

    def __init__(self, S: SimplicialCategory, tables: list[CategoryNerveTables], **kwargs):
        super().__init__(**kwargs)
        self.level_categories = S.cats
        self.simplicial_category = S
        self.tables = tables

    def rows(self, m: int, n: int) -> np.ndarray:
        return self.tables[n].rows[m]

    def decode(self, m: int, n: int, x: int) -> tuple[Hashable, list]:
        """``(first object key, [morphism keys])`` of the simplex ``x`` in ``X_{m,n}``."""
        row = self.tables[n].rows[m][x]
        cat = self.level_categories[n]
        return cat.obj_labels[row[0]], [cat.mor_labels[g] for g in row[1:]]

    def encode(self, m: int, n: int, obj_key: Hashable, mor_keys: Sequence) -> int:
        cat = self.level_categories[n]
        try:
            row = [cat.obj_index[obj_key]] + [cat.mor_index[k] for k in mor_keys]
        except KeyError as exc:
            raise StructuralError(f"{exc.args[0]!r} is not a cell of level {n}", [m, n]) from None
        return int(self.tables[n].index[m].lookup(np.array([row], dtype=np.int64))[0])


def bisimplicial_from_simplicial_category(S: SimplicialCategory, name: str = "") -> NerveOfSimplicialCategory:
    D = S.max_dim
    tables = [CategoryNerveTables(cat, D) for cat in S.cats]
    sims, hf, hs, vf, vs = {}, {}, {}, {}, {}
    for n in range(D + 1):
        T = tables[n]
        for m in range(D + 1):
            sims[(m, n)] = _as_tuples(T.rows[m])
            hf[(m, n)] = T.face_table(m)
            hs[(m, n)] = T.degeneracy_table(m)
            N = T.rows[m].shape[0]
            if n == 0:
                vf[(m, n)] = np.zeros((0, N), dtype=np.int64)
            else:
                vf[(m, n)] = np.stack([tables[n - 1].index[m].lookup(T.apply(m, S.faces[n][i]))
                                       for i in range(n + 1)])
            if n == D:
                vs[(m, n)] = np.zeros((0, N), dtype=np.int64)
            else:
                vs[(m, n)] = np.stack([tables[n + 1].index[m].lookup(T.apply(m, S.degeneracies[n][i]))
                                       for i in range(n + 1)])
    return NerveOfSimplicialCategory(S, tables, max_dim=D, simplices=sims, hfaces=hf, hdegens=hs,
                                     vfaces=vf, vdegens=vs, name=name or f"N{S.name}")


# -- hom-nerve helpers shared by the 2-category and double category levels ---

def _chain_face(chain: tuple, i: int, n: int, first_of, compose, drop_first_to):
    """Face ``d_i`` of a vertical chain ``(top, (c_1, ..., c_n))``.

    ``drop_first_to(c_1)`` gives the new top when ``c_1`` is dropped and
    ``compose(c_i, c_{i+1})`` the composite of two adjacent entries.
    """
    top, cells = chain
    if i == 0:
        return (drop_first_to(cells[0]), cells[1:])
    if i == n:
        return (top, cells[:-1])
    return (top, cells[:i - 1] + (compose(cells[i - 1], cells[i]),) + cells[i + 1:])


def _chain_degeneracy(chain: tuple, i: int, vertex_of, identity_at):
    top, cells = chain
    v = top if i == 0 else vertex_of(cells[i - 1])
    return (top, cells[:i] + (identity_at(v),) + cells[i:])


def two_category_levels(A: FiniteTwoCategory, D: int = DEFAULT_MAX_DIM) -> SimplicialCategory:
    """The simplicial category whose level ``n`` has columns of ``n`` stacked 2-cells."""
    cats: list[KeyedCategory] = []
    for n in range(D + 1):
        cols: list[tuple] = [(f, ()) for f in A.one_cells]
        for _ in range(n):
            cols = [(f, cells + (b,)) for f, cells in cols
                    for b in A.out2[A.tgt2[cells[-1]] if cells else f]]

        def comp(gk, fk):
            (g, bs), (f, als) = gk, fk
            return (A.compose(g, f), tuple(A.horizontal_paste(a, b) for a, b in zip(als, bs)))

        cats.append(KeyedCategory.from_keys(
            list(A.objects), cols,
            src=lambda k: A.src1[k[0]], tgt=lambda k: A.tgt1[k[0]],
            identity=lambda a, n=n: (A.identity1[a], (A.identity2[A.identity1[a]],) * n),
            compose=comp, name=f"{A.name}[{n}]"))

    def vface(n, i):
        return lambda k: _chain_face(k, i, n, None, lambda a, b: A.vertical_compose(b, a),
                                     lambda a: A.tgt2[a])

    def vdeg(i):
        return lambda k: _chain_degeneracy(k, i, lambda a: A.tgt2[a], lambda f: A.identity2[f])

    faces = [[] if n == 0 else [cats[n].functor_to(cats[n - 1], lambda o: o, vface(n, i), name=f"d_{i}")
                                for i in range(n + 1)] for n in range(D + 1)]
    degens = [[] if n == D else [cats[n].functor_to(cats[n + 1], lambda o: o, vdeg(i), name=f"s_{i}")
                                 for i in range(n + 1)] for n in range(D + 1)]
    return SimplicialCategory(cats, faces, degens, name=A.name)


def nerve_two_category(A: FiniteTwoCategory, D: int = DEFAULT_MAX_DIM) -> NerveOfSimplicialCategory:
    """``X_{m,n}``: ``m`` composable columns, each with ``n`` stacked 2-cells."""
    return bisimplicial_from_simplicial_category(two_category_levels(A, D), name=f"N{A.name}")


def double_category_levels(B: DoubleCategoryData, D: int = DEFAULT_MAX_DIM) -> SimplicialCategory:
    """The simplicial category whose level ``n`` has vertical ``n``-chains as objects
    and columns of ``n`` stacked squares as morphisms."""
    V = B.vertical_category()
    out_v = V.outgoing
    cats: list[KeyedCategory] = []
    for n in range(D + 1):
        objs: list[tuple] = [(o, ()) for o in B.objects]
        cols: list[tuple] = [(h, ()) for h in B.horizontals]
        for _ in range(n):
            objs = [(o, vs + (v,)) for o, vs in objs for v in out_v[B.vtgt[vs[-1]] if vs else o]]
            cols = [(h, ss + (s,)) for h, ss in cols
                    for s in B.squares_by_top.get(B.bottom[ss[-1]] if ss else h, ())]

        def comp(gk, fk):
            (g, ts), (h, ss) = gk, fk
            return (B.hor_comp[(g, h)], tuple(B.square_paste(s, t) for s, t in zip(ss, ts)))

        cats.append(KeyedCategory.from_keys(
            objs, cols,
            src=lambda k: (B.hsrc[k[0]], tuple(B.left[s] for s in k[1])),
            tgt=lambda k: (B.htgt[k[0]], tuple(B.right[s] for s in k[1])),
            identity=lambda o: (B.hor_identity[o[0]], tuple(B.sq_hor_identity[v] for v in o[1])),
            compose=comp, name=f"{B.name}[{n}]"))

    def oface(n, i):
        return lambda k: _chain_face(k, i, n, None, lambda a, b: B.ver_comp[(b, a)], lambda v: B.vtgt[v])

    def mface(n, i):
        return lambda k: _chain_face(k, i, n, None, lambda a, b: B.square_stack(a, b), lambda s: B.bottom[s])

    def odeg(i):
        return lambda k: _chain_degeneracy(k, i, lambda v: B.vtgt[v], lambda o: B.ver_identity[o])

    def mdeg(i):
        return lambda k: _chain_degeneracy(k, i, lambda s: B.bottom[s], lambda h: B.sq_ver_identity[h])

    faces = [[] if n == 0 else [cats[n].functor_to(cats[n - 1], oface(n, i), mface(n, i), name=f"d_{i}")
                                for i in range(n + 1)] for n in range(D + 1)]
    degens = [[] if n == D else [cats[n].functor_to(cats[n + 1], odeg(i), mdeg(i), name=f"s_{i}")
                                 for i in range(n + 1)] for n in range(D + 1)]
    return SimplicialCategory(cats, faces, degens, name=B.name)


def nerve_double_category(B: DoubleCategoryData, D: int = DEFAULT_MAX_DIM) -> NerveOfSimplicialCategory:
    """``X_{m,n}``: ``m``-by-``n`` grids of squares stored column by column."""
    return bisimplicial_from_simplicial_category(double_category_levels(B, D), name=f"N{B.name}")
