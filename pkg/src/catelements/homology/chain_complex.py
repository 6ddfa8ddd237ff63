"""Normalized integer chain complexes of truncated simplicial sets."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import ConsistencyError
from ..simplicial import TruncatedSimplicialSet
from .snf import SparseMatrix


@dataclass
class ChainComplex:
    """Bases are nondegenerate simplices; ``boundaries[k]`` maps degree ``k`` to ``k-1``.

    ``boundaries[0]`` is the zero map to the zero module.
    """

    name: str
    bases: list[np.ndarray]
    boundaries: list[SparseMatrix]

    @property
    def max_dim(self) -> int:
        return len(self.bases) - 1

    def ranks(self) -> list[int]:
        return [len(b) for b in self.bases]


def boundary_matrix(S: TruncatedSimplicialSet, k: int, bases: list[np.ndarray]) -> SparseMatrix:
    """``∂_k = Σ (-1)^i d_i`` on nondegenerate simplices; degenerate faces project to zero."""
    rows, cols = bases[k - 1], bases[k]
    pos = np.full(S.size(k - 1), -1, dtype=np.int64)
    pos[rows] = np.arange(len(rows))
    M = SparseMatrix(len(rows), len(cols))
    faces = S.faces[k]
    for j, x in enumerate(cols):
        for i in range(k + 1):
            r = int(pos[faces[i][x]])
            if r >= 0:
                M.add(r, j, -1 if i % 2 else 1)
    return M


def _compose_is_zero(A: SparseMatrix, B: SparseMatrix) -> bool:
    """Whether ``A @ B`` vanishes."""
    for j in range(B.n_cols):
        acc: dict[int, int] = {}
        for r in B.cols.get(j, ()):
            v = B.rows[r][j]
            for s in A.cols.get(r, ()):
                acc[s] = acc.get(s, 0) + A.rows[s][r] * v
        if any(acc.values()):
            return False
    return True


def chain_complex(S: TruncatedSimplicialSet, name: str = "") -> ChainComplex:
    """The normalized chain complex of ``S`` in degrees ``0..max_dim``; asserts ``∂∂ = 0``."""
    bases = [S.nondegenerate(k) for k in range(S.max_dim + 1)]
    bounds = [SparseMatrix(0, len(bases[0]))]
    for k in range(1, S.max_dim + 1):
        bounds.append(boundary_matrix(S, k, bases))
    for k in range(2, S.max_dim + 1):
        if not _compose_is_zero(bounds[k - 1], bounds[k]):
            raise ConsistencyError(f"∂_{k - 1}∘∂_{k} is not zero in the chain complex of {name or S!r}")
    return ChainComplex(name or getattr(S, "name", ""), bases, bounds)
