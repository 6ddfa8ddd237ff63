"""Single-entry corruptions of every structure table must be caught by the validators."""

from __future__ import annotations

import copy
import random

import numpy as np
import pytest

from catelements.category_core import validate_category, validate_double_category, validate_two_category
from catelements.simplicial import validate_bisimplicial, validate_simplicial
from helpers import bar_pair, fixture

MUTANTS = 60

CATEGORY_FIELDS = ("src", "tgt", "identity", "table")
TWO_CATEGORY_FIELDS = ("src1", "tgt1", "identity1", "src2", "tgt2", "identity2", "vcomp", "comp1", "paste")
DOUBLE_FIELDS = ("hsrc", "htgt", "hor_identity", "hor_comp", "vsrc", "vtgt", "ver_identity", "ver_comp",
                 "top", "bottom", "left", "right", "sq_hcomp", "sq_vcomp", "sq_hor_identity", "sq_ver_identity")
SIMPLICIAL_FIELDS = ("faces", "degeneracies")
BISIMPLICIAL_FIELDS = ("hfaces", "vfaces", "hdegens", "vdegens")


def _other(rng: random.Random, current, pool) -> int | None:
    choices = sorted({int(v) for v in pool} - {int(current)})
    return rng.choice(choices) if choices else None


def mutate(obj, fields, rng: random.Random):
    """A shallow copy of ``obj`` with one entry of one table replaced by a different value."""
    while True:
        name = rng.choice(fields)
        table = getattr(obj, name)
        if isinstance(table, tuple) and table:
            i = rng.randrange(len(table))
            new = _other(rng, table[i], table)
            if new is None:
                continue
            value = table[:i] + (new,) + table[i + 1:]
        elif isinstance(table, dict) and table and not isinstance(next(iter(table.values())), np.ndarray):
            key = rng.choice(sorted(table))
            new = _other(rng, table[key], table.values())
            if new is None:
                continue
            value = {**table, key: new}
        else:
            arrays = list(table.items()) if isinstance(table, dict) else list(enumerate(table))
            arrays = [(k, a) for k, a in arrays if a.size]
            if not arrays:
                continue
            key, arr = rng.choice(arrays)
            pos = tuple(rng.randrange(n) for n in arr.shape)
            new = _other(rng, arr[pos], arr.ravel())
            if new is None:
                continue
            arr = arr.copy()
            arr[pos] = new
            value = dict(table) if isinstance(table, dict) else list(table)
            value[key] = arr
        out = copy.copy(obj)
        setattr(out, name, value)
        return out, name


def _cases():
    P = bar_pair("walking_two_cell", 3)
    Q = bar_pair("vertical_composition", 3)
    return {
        "category": ([fixture("parallel_pair").source.underlying_category(),
                      fixture("composable").category(1)], CATEGORY_FIELDS, validate_category),
        "2-category": ([P.E, Q.E], TWO_CATEGORY_FIELDS, validate_two_category),
        "double category": ([P.B, Q.B], DOUBLE_FIELDS, validate_double_category),
        "simplicial": ([P.W2, P.Wd], SIMPLICIAL_FIELDS, validate_simplicial),
        "bisimplicial": ([P.X2, P.Xd], BISIMPLICIAL_FIELDS, validate_bisimplicial),
    }


def detection_rate(kind: str, seed: int = 0) -> tuple[int, int, list[str]]:
    objs, fields, validate = _cases()[kind]
    rng = random.Random(seed)
    missed = []
    for n in range(MUTANTS):
        obj = objs[n % len(objs)]
        assert validate(obj).ok
        mutant, name = mutate(obj, fields, rng)
        if validate(mutant).ok:
            missed.append(name)
    return MUTANTS - len(missed), MUTANTS, missed


@pytest.mark.parametrize("kind", ["category", "2-category", "double category", "simplicial", "bisimplicial"])
def test_every_mutant_is_detected(kind):
    caught, total, missed = detection_rate(kind)
    assert caught == total, missed
