"""The bar construction ``W̄X`` of a truncated bisimplicial set.

A ``k``-simplex is a tuple ``(t_0, ..., t_k)`` with ``t_j`` in ``X_{j,k-j}`` and
``d_0^v t_j = d_{j+1}^h t_{j+1}``.  Faces and degeneracies:

    d_i(t) = (d_i^v t_0, d_{i-1}^v t_1, ..., d_1^v t_{i-1}, d_i^h t_{i+1}, ..., d_i^h t_k)
    s_i(t) = (s_i^v t_0, s_{i-1}^v t_1, ..., s_0^v t_i, s_i^h t_i, ..., s_i^h t_k)

Entries are stored as IDs of the cells ``X_{j,k-j}``.
"""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from .nerves import RowIndex
from .simplicial import (DEFAULT_MAX_DIM, TruncatedBisimplicialSet, TruncatedSimplicialSet,
                         check_level_size)


class BarConstruction(TruncatedSimplicialSet):
    """``W̄X`` keeping ``rows[k]``: the ``(N, k+1)`` array of entry IDs."""

    def __init__(self, source: TruncatedBisimplicialSet, rows: list[np.ndarray], *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.source = source
        self.rows = rows

    def lookup_row(self, k: int, entries: Sequence[int]) -> int:
        """ID of the ``k``-simplex with the given entries; raises if they do not match."""
        return int(self.row_index[k].lookup(np.array([list(entries)], dtype=np.int64))[0])


def _level(X: TruncatedBisimplicialSet, k: int) -> np.ndarray:
    """Extend matching prefixes one entry at a time instead of filtering the product."""
    rows = np.arange(X.size(0, k), dtype=np.int64).reshape(-1, 1)
    for j in range(k):
        y = X.vfaces[(j, k - j)][0][rows[:, j]] if rows.shape[0] else np.zeros(0, dtype=np.int64)
        order, starts = X.hface_preimages(j + 1, j + 1, k - j - 1)
        counts = starts[y + 1] - starts[y]
        total = int(counts.sum())
        check_level_size(total, f"bar level {k}")
        parent = np.repeat(np.arange(rows.shape[0]), counts)
        offset = np.arange(total) - np.repeat(np.cumsum(counts) - counts, counts)
        nxt = order[np.repeat(starts[y], counts) + offset]
        rows = np.hstack([rows[parent], nxt.reshape(-1, 1)])
    return rows


def bar_face_rows(X: TruncatedBisimplicialSet, R: np.ndarray, k: int, i: int) -> np.ndarray:
    cols = [X.vfaces[(j, k - j)][i - j][R[:, j]] for j in range(i)]
    cols += [X.hfaces[(j, k - j)][i][R[:, j]] for j in range(i + 1, k + 1)]
    return np.stack(cols, axis=1) if cols else np.zeros((R.shape[0], 0), dtype=np.int64)


def bar_degeneracy_rows(X: TruncatedBisimplicialSet, R: np.ndarray, k: int, i: int) -> np.ndarray:
    cols = [X.vdegens[(j, k - j)][i - j][R[:, j]] for j in range(i + 1)]
    cols += [X.hdegens[(j, k - j)][i][R[:, j]] for j in range(i, k + 1)]
    return np.stack(cols, axis=1)


def bar_construction(X: TruncatedBisimplicialSet, D: int | None = None) -> BarConstruction:
    """``W̄X`` up to degree ``D`` (at most the truncation of ``X``)."""
    D = X.max_dim if D is None else D
    if D > X.max_dim:
        raise ValueError(f"bar degree {D} exceeds the truncation {X.max_dim} of {X.name}")
    rows = [_level(X, k) for k in range(D + 1)]
    base = max(max(X.size(m, n) for m in range(D + 1) for n in range(D + 1)), 1)
    index = [RowIndex(r, base) for r in rows]
    faces, degens = [], []
    for k in range(D + 1):
        n = rows[k].shape[0]
        faces.append(np.stack([index[k - 1].lookup(bar_face_rows(X, rows[k], k, i)) for i in range(k + 1)])
                     if k else np.zeros((0, n), dtype=np.int64))
        degens.append(np.stack([index[k + 1].lookup(bar_degeneracy_rows(X, rows[k], k, i))
                                for i in range(k + 1)]) if k < D else np.zeros((0, n), dtype=np.int64))
    sims = [[tuple(r) for r in R.tolist()] for R in rows]
    out = BarConstruction(X, rows, sims, faces, degens, name=f"W̄{X.name}")
    out.row_index = index
    return out


def bar_count_report(W: TruncatedSimplicialSet) -> list[dict]:
    """Per-degree level size and nondegenerate count."""
    nd = W.nondegenerate_counts()
    return [{"k": k, "size": W.size(k), "nondegenerate": nd[k]} for k in range(W.max_dim + 1)]
