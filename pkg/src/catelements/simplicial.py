"""Truncated simplicial and bisimplicial sets with tabulated operators.

A truncated simplicial set of dimension ``D`` stores levels ``S_0..S_D``.
Each level is a list of hashable encodings (interned: position = ID) and
the operators are integer tables:

* ``faces[k]`` has shape ``(k+1, |S_k|)``; row ``i`` is ``d_i``;
* ``degeneracies[k]`` has shape ``(k+1, |S_k|)`` for ``k < D`` and
  ``(0, |S_D|)`` at the top level; row ``i`` is ``s_i``.

Bisimplicial sets use the same layout per cell ``(m, n)``; ``m`` is the
horizontal degree and ``n`` the vertical one.
"""

from __future__ import annotations

from collections.abc import Callable, Hashable, Sequence
from dataclasses import dataclass

import numpy as np

from .category_core.report import ValidationReport
from .errors import ResourceLimitError, StructuralError

DEFAULT_MAX_DIM = 4
MAX_LEVEL_SIZE = 2_000_000
MAX_REPORTED = 200


def check_level_size(n: int, where: str) -> None:
    if n > MAX_LEVEL_SIZE:
        raise ResourceLimitError(
            f"{where} would hold {n} simplices, above the guard of {MAX_LEVEL_SIZE}; "
            "lower --max-dim or use a smaller fixture")


def _table(rows: Sequence[Sequence[int]], n: int) -> np.ndarray:
    if len(rows) == 0:
        return np.zeros((0, n), dtype=np.int64)
    return np.asarray(rows, dtype=np.int64).reshape(len(rows), n)


class TruncatedSimplicialSet:
    def __init__(self, simplices: Sequence[Sequence[Hashable]], faces: Sequence[np.ndarray],
                 degeneracies: Sequence[np.ndarray], name: str = ""):
        self.simplices = [list(level) for level in simplices]
        self.faces = [np.asarray(t, dtype=np.int64) for t in faces]
        self.degeneracies = [np.asarray(t, dtype=np.int64) for t in degeneracies]
        self.name = name
        self._index: dict[int, dict] = {}

    @classmethod
    def from_functions(cls, levels: Sequence[Sequence[Hashable]],
                       face: Callable[[int, int, Hashable], Hashable],
                       degeneracy: Callable[[int, int, Hashable], Hashable],
                       name: str = "") -> "TruncatedSimplicialSet":
        """Tabulate encoding-level operators ``face(k, i, x)`` and ``degeneracy(k, i, x)``."""
        D = len(levels) - 1
        index = [{x: j for j, x in enumerate(level)} for level in levels]

        def look(k, x, op):
            try:
                return index[k][x]
            except KeyError:
                raise StructuralError(f"{op} lands outside level {k}: {x!r}", [op, k]) from None

        faces, degens = [], []
        for k, level in enumerate(levels):
            n = len(level)
            faces.append(_table([[look(k - 1, face(k, i, x), f"d_{i}") for x in level]
                                 for i in range(k + 1)] if k > 0 else [], n))
            degens.append(_table([[look(k + 1, degeneracy(k, i, x), f"s_{i}") for x in level]
                                  for i in range(k + 1)] if k < D else [], n))
        out = cls(levels, faces, degens, name=name)
        out._index = dict(enumerate(index))
        return out

    @property
    def max_dim(self) -> int:
        return len(self.simplices) - 1

    def size(self, k: int) -> int:
        return len(self.simplices[k])

    def sizes(self) -> list[int]:
        return [self.size(k) for k in range(self.max_dim + 1)]

    def index(self, k: int) -> dict:
        if k not in self._index:
            self._index[k] = {x: j for j, x in enumerate(self.simplices[k])}
        return self._index[k]

    def lookup(self, k: int, encoding: Hashable) -> int:
        return self.index(k)[encoding]

    def face(self, i: int, k: int, x: int) -> int:
        if not 0 < k <= self.max_dim or not 0 <= i <= k:
            raise StructuralError(f"no face d_{i} on level {k}", [i, k])
        return int(self.faces[k][i, x])

    def degeneracy(self, i: int, k: int, x: int) -> int:
        if not 0 <= k < self.max_dim or not 0 <= i <= k:
            raise StructuralError(f"no degeneracy s_{i} on level {k} (truncated at {self.max_dim})", [i, k])
        return int(self.degeneracies[k][i, x])

    def degenerate_mask(self, k: int) -> np.ndarray:
        """``x`` is degenerate iff ``s_i d_i x == x`` for some ``i < k``."""
        n = self.size(k)
        mask = np.zeros(n, dtype=bool)
        if k == 0:
            return mask
        ids = np.arange(n)
        for i in range(k):
            mask |= self.degeneracies[k - 1][i][self.faces[k][i]] == ids
        return mask

    def nondegenerate(self, k: int) -> np.ndarray:
        return np.flatnonzero(~self.degenerate_mask(k))

    def nondegenerate_counts(self) -> list[int]:
        return [int((~self.degenerate_mask(k)).sum()) for k in range(self.max_dim + 1)]

    def truncate(self, D: int) -> "TruncatedSimplicialSet":
        if D > self.max_dim:
            raise StructuralError(f"cannot extend truncation from {self.max_dim} to {D}", [D])
        degens = list(self.degeneracies[:D + 1])
        degens[D] = np.zeros((0, self.size(D)), dtype=np.int64)
        return TruncatedSimplicialSet(self.simplices[:D + 1], self.faces[:D + 1], degens, name=self.name)

    def __repr__(self) -> str:
        return f"TruncatedSimplicialSet({self.name!r}, sizes={self.sizes()})"


class TruncatedBisimplicialSet:
    """Cells ``X_{m,n}`` for ``0 ≤ m, n ≤ D``; operators keyed by ``(m, n)``."""

    def __init__(self, max_dim: int, simplices: dict, hfaces: dict, hdegens: dict,
                 vfaces: dict, vdegens: dict, name: str = ""):
        self.D = max_dim
        self.simplices = {k: list(v) for k, v in simplices.items()}
        self.hfaces = {k: np.asarray(v, dtype=np.int64) for k, v in hfaces.items()}
        self.hdegens = {k: np.asarray(v, dtype=np.int64) for k, v in hdegens.items()}
        self.vfaces = {k: np.asarray(v, dtype=np.int64) for k, v in vfaces.items()}
        self.vdegens = {k: np.asarray(v, dtype=np.int64) for k, v in vdegens.items()}
        self.name = name
        self._index: dict[tuple[int, int], dict] = {}
        self._hface_inverse: dict[tuple[int, int, int], tuple[np.ndarray, np.ndarray]] = {}

    @property
    def max_dim(self) -> int:
        return self.D

    def size(self, m: int, n: int) -> int:
        return len(self.simplices[(m, n)])

    def index(self, m: int, n: int) -> dict:
        if (m, n) not in self._index:
            self._index[(m, n)] = {x: j for j, x in enumerate(self.simplices[(m, n)])}
        return self._index[(m, n)]

    def lookup(self, m: int, n: int, encoding: Hashable) -> int:
        return self.index(m, n)[encoding]

    def hface(self, i: int, m: int, n: int, x: int) -> int:
        if not 0 < m <= self.D or not 0 <= i <= m:
            raise StructuralError(f"no horizontal face d_{i}^h on ({m},{n})", [i, m, n])
        return int(self.hfaces[(m, n)][i, x])

    def vface(self, i: int, m: int, n: int, x: int) -> int:
        if not 0 < n <= self.D or not 0 <= i <= n:
            raise StructuralError(f"no vertical face d_{i}^v on ({m},{n})", [i, m, n])
        return int(self.vfaces[(m, n)][i, x])

    def hface_preimages(self, i: int, m: int, n: int) -> tuple[np.ndarray, np.ndarray]:
        """``(order, starts)`` so that ``order[starts[y]:starts[y+1]]`` lists ``x`` with ``d_i^h x = y``."""
        key = (i, m, n)
        if key not in self._hface_inverse:
            col = self.hfaces[(m, n)][i]
            order = np.argsort(col, kind="stable")
            starts = np.searchsorted(col[order], np.arange(self.size(m - 1, n) + 1))
            self._hface_inverse[key] = (order, starts)
        return self._hface_inverse[key]

    def row(self, n: int) -> TruncatedSimplicialSet:
        """The horizontal simplicial set ``m ↦ X_{m,n}``."""
        D = self.D
        return TruncatedSimplicialSet([self.simplices[(m, n)] for m in range(D + 1)],
                                      [self.hfaces[(m, n)] for m in range(D + 1)],
                                      [self.hdegens[(m, n)] for m in range(D + 1)],
                                      name=f"{self.name}[row {n}]")

    def column(self, m: int) -> TruncatedSimplicialSet:
        """The vertical simplicial set ``n ↦ X_{m,n}``."""
        D = self.D
        return TruncatedSimplicialSet([self.simplices[(m, n)] for n in range(D + 1)],
                                      [self.vfaces[(m, n)] for n in range(D + 1)],
                                      [self.vdegens[(m, n)] for n in range(D + 1)],
                                      name=f"{self.name}[column {m}]")

    def sizes(self) -> list[list[int]]:
        return [[self.size(m, n) for n in range(self.D + 1)] for m in range(self.D + 1)]

    def __repr__(self) -> str:
        return f"TruncatedBisimplicialSet({self.name!r}, D={self.D})"


@dataclass
class SimplicialMap:
    source: TruncatedSimplicialSet
    target: TruncatedSimplicialSet
    levels: list[np.ndarray]
    name: str = ""
    describe: Callable[[int, int], str] | None = None


# -- validation --------------------------------------------------------------

def _report_mismatch(rep: ValidationReport, kind: str, rule: str, lhs: np.ndarray, rhs: np.ndarray,
                     where: tuple, labels: Sequence | None) -> None:
    bad = np.flatnonzero(lhs != rhs)
    for x in bad[:MAX_REPORTED]:
        lab = str(labels[x]) if labels is not None else ""
        rep.add(kind, rule, where + (int(x),), lab)
    if len(bad) > MAX_REPORTED:
        rep.add(kind, rule, where + ("...",), f"{len(bad) - MAX_REPORTED} further instances")


def _check_structure(rep: ValidationReport, D: int, size, faces, degens, tag: str) -> None:
    for k in range(D + 1):
        n = size(k)
        F = faces(k)
        if F.shape != (k + 1 if k > 0 else 0, n):
            rep.add("structural", f"{tag}face table has wrong shape", (k, tuple(F.shape)))
        elif k > 0 and F.size and (F.min() < 0 or F.max() >= size(k - 1)):
            rep.add("structural", f"{tag}face lands outside level {k - 1}", (k,))
        S = degens(k)
        if S.shape != (k + 1 if k < D else 0, n):
            rep.add("structural", f"{tag}degeneracy table has wrong shape", (k, tuple(S.shape)))
        elif k < D and S.size and (S.min() < 0 or S.max() >= size(k + 1)):
            rep.add("structural", f"{tag}degeneracy lands outside level {k + 1}", (k,))


def _check_identities(rep: ValidationReport, D: int, size, faces, degens, tag: str,
                      labels=None) -> None:
    """All simplicial identities on the given operator tables."""
    lab = labels if labels is not None else (lambda k: None)
    for k in range(2, D + 1):
        Fk, Fk1 = faces(k), faces(k - 1)
        for j in range(1, k + 1):
            for i in range(j):
                rep.checked += size(k)
                _report_mismatch(rep, "identity", f"{tag}d_{i} d_{j} = d_{j - 1} d_{i}",
                                 Fk1[i][Fk[j]], Fk1[j - 1][Fk[i]], (k, i, j), lab(k))
    for k in range(D + 1):
        n = size(k)
        ids = np.arange(n)
        if k == D:
            rep.skipped += n * (k + 1) * (k + 2) + n * (k + 1) * (k + 2) // 2
            continue
        Sk, Fk1 = degens(k), faces(k + 1)
        for j in range(k + 1):
            sj = Sk[j]
            for i in range(k + 2):
                rep.checked += n
                lhs = Fk1[i][sj]
                if i < j:
                    rhs = degens(k - 1)[j - 1][faces(k)[i]]
                    rule = f"{tag}d_{i} s_{j} = s_{j - 1} d_{i}"
                elif i in (j, j + 1):
                    rhs = ids
                    rule = f"{tag}d_{i} s_{j} = id"
                else:
                    rhs = degens(k - 1)[j][faces(k)[i - 1]]
                    rule = f"{tag}d_{i} s_{j} = s_{j} d_{i - 1}"
                _report_mismatch(rep, "identity", rule, lhs, rhs, (k, i, j), lab(k))
        if k + 1 == D:
            rep.skipped += n * (k + 1) * (k + 2) // 2
            continue
        Sk1 = degens(k + 1)
        for j in range(k + 1):
            for i in range(j + 1):
                rep.checked += n
                _report_mismatch(rep, "identity", f"{tag}s_{i} s_{j} = s_{j + 1} s_{i}",
                                 Sk1[i][Sk[j]], Sk1[j + 1][Sk[i]], (k, i, j), lab(k))


def validate_simplicial(S: TruncatedSimplicialSet) -> ValidationReport:
    rep = ValidationReport(f"simplicial set {S.name}")
    D = S.max_dim
    _check_structure(rep, D, S.size, lambda k: S.faces[k], lambda k: S.degeneracies[k], "")
    if not rep.ok:
        return rep
    _check_identities(rep, D, S.size, lambda k: S.faces[k], lambda k: S.degeneracies[k], "",
                      labels=lambda k: S.simplices[k])
    return rep


def validate_bisimplicial(X: TruncatedBisimplicialSet) -> ValidationReport:
    rep = ValidationReport(f"bisimplicial set {X.name}")
    D = X.D
    for n in range(D + 1):
        _check_structure(rep, D, lambda m: X.size(m, n), lambda m: X.hfaces[(m, n)],
                         lambda m: X.hdegens[(m, n)], f"row {n}: ")
    for m in range(D + 1):
        _check_structure(rep, D, lambda n: X.size(m, n), lambda n: X.vfaces[(m, n)],
                         lambda n: X.vdegens[(m, n)], f"column {m}: ")
    if not rep.ok:
        return rep
    for n in range(D + 1):
        _check_identities(rep, D, lambda m: X.size(m, n), lambda m: X.hfaces[(m, n)],
                          lambda m: X.hdegens[(m, n)], f"h@n={n}: ",
                          labels=lambda m: X.simplices[(m, n)])
    for m in range(D + 1):
        _check_identities(rep, D, lambda n: X.size(m, n), lambda n: X.vfaces[(m, n)],
                          lambda n: X.vdegens[(m, n)], f"v@m={m}: ",
                          labels=lambda n: X.simplices[(m, n)])
    # every horizontal operator commutes with every vertical one
    for m in range(D + 1):
        for n in range(D + 1):
            N = X.size(m, n)
            labels = X.simplices[(m, n)]
            hF, vF = X.hfaces[(m, n)], X.vfaces[(m, n)]
            hS, vS = X.hdegens[(m, n)], X.vdegens[(m, n)]
            for i in range(m + 1 if m > 0 else 0):
                for j in range(n + 1 if n > 0 else 0):
                    rep.checked += N
                    _report_mismatch(rep, "commutation", f"d_{i}^h d_{j}^v = d_{j}^v d_{i}^h",
                                     X.hfaces[(m, n - 1)][i][vF[j]], X.vfaces[(m - 1, n)][j][hF[i]],
                                     (m, n, i, j), labels)
                for j in range(n + 1 if n < D else 0):
                    rep.checked += N
                    _report_mismatch(rep, "commutation", f"d_{i}^h s_{j}^v = s_{j}^v d_{i}^h",
                                     X.hfaces[(m, n + 1)][i][vS[j]], X.vdegens[(m - 1, n)][j][hF[i]],
                                     (m, n, i, j), labels)
            for i in range(m + 1 if m < D else 0):
                for j in range(n + 1 if n > 0 else 0):
                    rep.checked += N
                    _report_mismatch(rep, "commutation", f"s_{i}^h d_{j}^v = d_{j}^v s_{i}^h",
                                     X.hdegens[(m, n - 1)][i][vF[j]], X.vfaces[(m + 1, n)][j][hS[i]],
                                     (m, n, i, j), labels)
                for j in range(n + 1 if n < D else 0):
                    rep.checked += N
                    _report_mismatch(rep, "commutation", f"s_{i}^h s_{j}^v = s_{j}^v s_{i}^h",
                                     X.hdegens[(m, n + 1)][i][vS[j]], X.vdegens[(m + 1, n)][j][hS[i]],
                                     (m, n, i, j), labels)
    return rep


def is_simplicial_map(phi: SimplicialMap) -> ValidationReport:
    """Check commutation with every face and degeneracy.

    For each operator and level only the first failing simplex is listed;
    the number of further failures is kept in the message.
    """
    S, T = phi.source, phi.target
    rep = ValidationReport(f"simplicial map {phi.name}")
    D = min(S.max_dim, T.max_dim)
    if len(phi.levels) < D + 1:
        rep.add("structural", "level function missing", (len(phi.levels), D))
        return rep
    for k in range(D + 1):
        f = np.asarray(phi.levels[k])
        if f.shape != (S.size(k),) or (f.size and (f.min() < 0 or f.max() >= T.size(k))):
            rep.add("structural", "level function not total", (k,))
    if not rep.ok:
        return rep
    for k in range(D + 1):
        fk = np.asarray(phi.levels[k])
        for i in range(k + 1 if k > 0 else 0):
            rep.checked += S.size(k)
            lhs = T.faces[k][i][fk]
            rhs = np.asarray(phi.levels[k - 1])[S.faces[k][i]]
            _first_failure(rep, f"d_{i}", k, lhs, rhs, S.simplices[k], phi.describe)
        for i in range(k + 1 if k < D else 0):
            rep.checked += S.size(k)
            lhs = T.degeneracies[k][i][fk]
            rhs = np.asarray(phi.levels[k + 1])[S.degeneracies[k][i]]
            _first_failure(rep, f"s_{i}", k, lhs, rhs, S.simplices[k], phi.describe)
    return rep


def _first_failure(rep, op: str, k: int, lhs, rhs, labels, describe=None) -> None:
    bad = np.flatnonzero(lhs != rhs)
    if len(bad):
        x = int(bad[0])
        what = describe(k, x) if describe else str(labels[x])
        rep.add("map", f"{op} commutes", (op, k, x),
                f"first failure at {what}; {len(bad)} failing simplices")


def diagonal(X: TruncatedBisimplicialSet) -> TruncatedSimplicialSet:
    """``k ↦ X_{k,k}`` with ``d_i = d_i^h d_i^v`` and ``s_i = s_i^h s_i^v``."""
    D = X.D
    faces, degens = [], []
    for k in range(D + 1):
        n = X.size(k, k)
        if k == 0:
            faces.append(np.zeros((0, n), dtype=np.int64))
        else:
            faces.append(np.stack([X.hfaces[(k, k - 1)][i][X.vfaces[(k, k)][i]] for i in range(k + 1)]))
        if k == D:
            degens.append(np.zeros((0, n), dtype=np.int64))
        else:
            degens.append(np.stack([X.hdegens[(k, k + 1)][i][X.vdegens[(k, k)][i]] for i in range(k + 1)]))
    return TruncatedSimplicialSet([X.simplices[(k, k)] for k in range(D + 1)], faces, degens,
                                  name=f"diag {X.name}")


def identity_map(S: TruncatedSimplicialSet) -> SimplicialMap:
    return SimplicialMap(S, S, [np.arange(S.size(k)) for k in range(S.max_dim + 1)], name=f"id[{S.name}]")


# -- serialization -----------------------------------------------------------

def _enc_json(x):
    if isinstance(x, tuple):
        return [_enc_json(y) for y in x]
    if isinstance(x, np.integer):
        return int(x)
    return x


def _enc_from_json(x):
    if isinstance(x, list):
        return tuple(_enc_from_json(y) for y in x)
    return x


def simplicial_to_doc(S: TruncatedSimplicialSet) -> dict:
    return {
        "kind": "simplicial",
        "name": S.name,
        "max_dim": S.max_dim,
        "levels": [{"simplices": [_enc_json(x) for x in S.simplices[k]],
                    "faces": S.faces[k].tolist(), "degeneracies": S.degeneracies[k].tolist()}
                   for k in range(S.max_dim + 1)],
    }


def simplicial_from_doc(doc: dict) -> TruncatedSimplicialSet:
    levels = doc["levels"]
    if len(levels) != doc["max_dim"] + 1:
        raise StructuralError("number of levels does not match max_dim", [doc["max_dim"]])
    sims = [[_enc_from_json(x) for x in lv["simplices"]] for lv in levels]
    return TruncatedSimplicialSet(
        sims, [_table(lv["faces"], len(s)) for lv, s in zip(levels, sims)],
        [_table(lv["degeneracies"], len(s)) for lv, s in zip(levels, sims)], name=doc.get("name", ""))


def bisimplicial_to_doc(X: TruncatedBisimplicialSet) -> dict:
    cells = []
    for m in range(X.D + 1):
        for n in range(X.D + 1):
            cells.append({"m": m, "n": n, "simplices": [_enc_json(x) for x in X.simplices[(m, n)]],
                          "hfaces": X.hfaces[(m, n)].tolist(), "hdegeneracies": X.hdegens[(m, n)].tolist(),
                          "vfaces": X.vfaces[(m, n)].tolist(), "vdegeneracies": X.vdegens[(m, n)].tolist()})
    return {"kind": "bisimplicial", "name": X.name, "max_dim": X.D, "cells": cells}


def bisimplicial_from_doc(doc: dict) -> TruncatedBisimplicialSet:
    D = doc["max_dim"]
    sims, hf, hs, vf, vs = {}, {}, {}, {}, {}
    for cell in doc["cells"]:
        key = (cell["m"], cell["n"])
        sims[key] = [_enc_from_json(x) for x in cell["simplices"]]
        N = len(sims[key])
        hf[key], hs[key] = _table(cell["hfaces"], N), _table(cell["hdegeneracies"], N)
        vf[key], vs[key] = _table(cell["vfaces"], N), _table(cell["vdegeneracies"], N)
    missing = [(m, n) for m in range(D + 1) for n in range(D + 1) if (m, n) not in sims]
    if missing:
        raise StructuralError(f"bisimplicial document lacks cells {missing[:5]}", missing[:5])
    return TruncatedBisimplicialSet(D, sims, hf, hs, vf, vs, name=doc.get("name", ""))
