"""Shared fixtures, caches and strategies for the test suite."""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from hypothesis import strategies as st

from catelements import FIXTURES, BarPair, load_fixture
from catelements.io import two_functor_from_doc

ALL_FIXTURES = FIXTURES


@lru_cache(maxsize=None)
def fixture(name: str):
    return load_fixture(name)


@lru_cache(maxsize=None)
def bar_pair(name: str, D: int = 4) -> BarPair:
    return BarPair(fixture(name), D)


# -- random inputs ------------------------------------------------------------

def poset_doc(n: int, relation: set[tuple[int, int]], prefix: str = "p") -> dict:
    """A thin category on ``prefix0..`` from a strict order given as pairs ``i < j``."""
    objs = [f"{prefix}{i}" for i in range(n)]
    mors = [{"id": f"{objs[i]}<{objs[j]}", "src": objs[i], "tgt": objs[j]} for i, j in sorted(relation)]
    return {"objects": objs, "morphisms": mors, "thin": True}


@st.composite
def posets(draw, max_size: int = 4) -> tuple[int, set[tuple[int, int]]]:
    """Random finite posets, as the transitive closure of a random upper-triangular relation."""
    n = draw(st.integers(1, max_size))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = {p for p in pairs if draw(st.booleans())}
    closed = set(chosen)
    changed = True
    while changed:
        changed = False
        for (a, b), (c, d) in product(list(closed), list(closed)):
            if b == c and (a, d) not in closed:
                closed.add((a, d))
                changed = True
    return n, closed


def leq(rel: set, a: int, b: int) -> bool:
    return a == b or (a, b) in rel


@st.composite
def walking_two_cell_functors(draw):
    """``F`` on the walking 2-cell ``alpha: f => g: c -> c'`` with random fibres.

    ``F(c')`` is the chain ``[k]`` (k = 0 or 1) and ``F(c)`` a random poset; ``Ff``
    and ``Fg`` are monotone with ``Ff <= Fg`` pointwise, so ``F(alpha)`` exists and
    every strictness condition holds.
    """
    n, rel = draw(posets())
    k = draw(st.integers(0, 1))
    choices = []
    for ff in product(range(n), repeat=k + 1):
        for fg in product(range(n), repeat=k + 1):
            mono = all(leq(rel, ff[i], ff[i + 1]) and leq(rel, fg[i], fg[i + 1]) for i in range(k))
            if mono and all(leq(rel, ff[i], fg[i]) for i in range(k + 1)):
                choices.append((ff, fg))
    ff, fg = draw(st.sampled_from(choices))
    target = poset_doc(k + 1, {(0, 1)} if k else set(), prefix="y")
    doc = {
        "kind": "twofunctor", "name": "random",
        "twocat": {"objects": ["c", "c'"],
                   "homs": [{"src": "c", "tgt": "c'", "one_cells": ["f", "g"],
                             "two_cells": [{"id": "alpha", "src": "f", "tgt": "g"}]}]},
        "categories": {"c": poset_doc(n, rel), "c'": target},
        "functors": {"f": {"objects": {f"y{i}": f"p{ff[i]}" for i in range(k + 1)}},
                     "g": {"objects": {f"y{i}": f"p{fg[i]}" for i in range(k + 1)}}},
    }
    return two_functor_from_doc(doc)


@st.composite
def chain_functors(draw):
    """``F`` on the chain ``a -> b -> c`` (locally discrete) with random posets and monotone maps."""
    sizes, rels = [], []
    for _ in range(3):
        n, rel = draw(posets(3))
        sizes.append(n)
        rels.append(rel)

    def monotone(src: int, tgt: int) -> tuple:
        maps = [m for m in product(range(sizes[tgt]), repeat=sizes[src])
                if all(leq(rels[tgt], m[i], m[j]) for i, j in rels[src])]
        return draw(st.sampled_from(maps))

    # u: a -> b gives Fu: F(b) -> F(a); v: b -> c gives Fv: F(c) -> F(b)
    fu, fv = monotone(1, 0), monotone(2, 1)
    names = "abc"
    doc = {
        "kind": "twofunctor", "name": "random_chain",
        "twocat": {"objects": ["a", "b", "c"],
                   "homs": [{"src": "a", "tgt": "b", "one_cells": ["u"]},
                            {"src": "b", "tgt": "c", "one_cells": ["v"]},
                            {"src": "a", "tgt": "c", "one_cells": ["vu"]}],
                   "hcomp": {"one_cells": [["v", "u", "vu"]]}},
        "categories": {names[i]: poset_doc(sizes[i], rels[i], prefix=names[i]) for i in range(3)},
        "functors": {"u": {"objects": {f"b{i}": f"a{fu[i]}" for i in range(sizes[1])}},
                     "v": {"objects": {f"c{i}": f"b{fv[i]}" for i in range(sizes[2])}}},
    }
    return two_functor_from_doc(doc)
