"""The homotopy colimit of ``F: C^op → Cat`` as a simplicial category.

Level ``n`` has objects ``(c_0, x, (f_1, ..., f_n))`` with ``x`` in ``Fc_0`` and
``f_i: c_i → c_{i-1}`` in ``C``, and morphisms ``(c_0, φ, (α_1, ..., α_n))``
with ``φ: x → y`` in ``Fc_0`` and ``α_i: f_i ⇒ g_i``; composition is
componentwise.

``d_0`` reindexes along the first 1-cell: ``(x, f_1, ...) ↦ (Ff_1(x), f_2, ...)``
and on morphisms ``φ, α_1 ↦ Fg_1(φ)∘(Fα_1)_x``.  Inner faces compose
``f_i∘f_{i+1}`` and paste ``α_{i+1}|α_i``; ``d_n`` drops the last entry;
``s_i`` inserts an identity 1-cell (and its identity 2-cell) after ``f_i``.
"""

from __future__ import annotations

from .category_core import FiniteFunctor, TwoFunctorToCat
from .nerves import (KeyedCategory, NerveOfSimplicialCategory, SimplicialCategory,
                     bisimplicial_from_simplicial_category)
from .simplicial import DEFAULT_MAX_DIM, TruncatedSimplicialSet, check_level_size, diagonal


def _into(C, c: int) -> list[int]:
    return [f for f in C.one_cells if C.tgt1[f] == c]


def hocolim_level(F: TwoFunctorToCat, n: int) -> KeyedCategory:
    """The category of ``n``-simplices of the homotopy colimit."""
    C = F.source
    chains: list[tuple[int, tuple]] = [(c, ()) for c in C.objects]
    for _ in range(n):
        chains = [(c0, fs + (f,)) for c0, fs in chains
                  for f in _into(C, C.src1[fs[-1]] if fs else c0)]
    objs: list[tuple] = []
    mors: list[tuple] = []
    for c0, fs in chains:
        Fc = F.category(c0)
        objs.extend((c0, x, fs) for x in Fc.objects)
        cells: list[tuple] = [()]
        for f in fs:
            cells = [a + (alpha,) for a in cells for alpha in C.out2[f]]
        check_level_size(len(cells) * Fc.n_morphisms, f"hocolim level {n}")
        mors.extend((c0, phi, a) for phi in Fc.morphisms for a in cells)

    def src(k):
        c0, phi, a = k
        return (c0, F.category(c0).src[phi], tuple(C.src2[x] for x in a))

    def tgt(k):
        c0, phi, a = k
        return (c0, F.category(c0).tgt[phi], tuple(C.tgt2[x] for x in a))

    def identity(o):
        c0, x, fs = o
        return (c0, F.category(c0).identity[x], tuple(C.identity2[f] for f in fs))

    def compose(g, f):
        c0, psi, b = g
        _, phi, a = f
        return (c0, F.category(c0).compose(psi, phi),
                tuple(C.vertical_compose(y, x) for x, y in zip(a, b)))

    return KeyedCategory.from_keys(objs, mors, src, tgt, identity, compose,
                                   name=f"hocolim{F.name}[{n}]")


def _face_maps(F: TwoFunctorToCat, n: int, i: int):
    C = F.source
    if i == 0:
        def on_obj(o):
            _, x, fs = o
            return (C.src1[fs[0]], F.push_object(fs[0], x), fs[1:])

        def on_mor(m):
            c0, phi, a = m
            x = F.category(c0).src[phi]
            c1 = C.src_obj(a[0])
            g1 = C.tgt2[a[0]]
            first = F.category(c1).compose(F.push_morphism(g1, phi), F.component(a[0], x))
            return (c1, first, a[1:])
    elif i == n:
        def on_obj(o):
            return (o[0], o[1], o[2][:-1])

        def on_mor(m):
            return (m[0], m[1], m[2][:-1])
    else:
        def on_obj(o):
            c0, x, fs = o
            return (c0, x, fs[:i - 1] + (C.compose(fs[i - 1], fs[i]),) + fs[i + 1:])

        def on_mor(m):
            c0, phi, a = m
            return (c0, phi, a[:i - 1] + (C.horizontal_paste(a[i], a[i - 1]),) + a[i + 1:])
    return on_obj, on_mor


def _degeneracy_maps(F: TwoFunctorToCat, i: int):
    C = F.source

    def vertex(c0, fs):
        return c0 if i == 0 else C.src1[fs[i - 1]]

    def on_obj(o):
        c0, x, fs = o
        return (c0, x, fs[:i] + (C.identity1[vertex(c0, fs)],) + fs[i:])

    def on_mor(m):
        c0, phi, a = m
        fs = tuple(C.src2[x] for x in a)
        return (c0, phi, a[:i] + (C.identity2[C.identity1[vertex(c0, fs)]],) + a[i:])
    return on_obj, on_mor


def hocolim_face_d0(F: TwoFunctorToCat, n: int, levels: list[KeyedCategory] | None = None) -> FiniteFunctor:
    """The face functor ``d_0`` from level ``n`` to level ``n-1``."""
    if n < 1:
        raise ValueError("d_0 needs n >= 1")
    src = levels[n] if levels else hocolim_level(F, n)
    tgt = levels[n - 1] if levels else hocolim_level(F, n - 1)
    return src.functor_to(tgt, *_face_maps(F, n, 0), name="d_0")


def hocolim_simplicial_category(F: TwoFunctorToCat, D: int = DEFAULT_MAX_DIM) -> SimplicialCategory:
    cats = [hocolim_level(F, n) for n in range(D + 1)]
    faces = [[cats[n].functor_to(cats[n - 1], *_face_maps(F, n, i), name=f"d_{i}")
              for i in range(n + 1)] if n else [] for n in range(D + 1)]
    degens = [[cats[n].functor_to(cats[n + 1], *_degeneracy_maps(F, i), name=f"s_{i}")
               for i in range(n + 1)] if n < D else [] for n in range(D + 1)]
    return SimplicialCategory(cats, faces, degens, name=f"hocolim{F.name}")


def hocolim_bisimplicial(F: TwoFunctorToCat, D: int = DEFAULT_MAX_DIM
                         ) -> tuple[NerveOfSimplicialCategory, TruncatedSimplicialSet]:
    """``Y_{m,n} = N_m(level n)`` together with its diagonal."""
    Y = bisimplicial_from_simplicial_category(hocolim_simplicial_category(F, D),
                                              name=f"N hocolim{F.name}")
    return Y, diagonal(Y)
