"""Smith normal form of sparse integer matrices over Python ints.

Only the diagonal is returned: the rank and the invariant factors.  Pivots
are chosen by smallest absolute value, so unit pivots are taken first and
coefficients stay small on the matrices produced here.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from math import gcd


class SparseMatrix:
    """A mutable integer matrix stored by rows and by columns."""

    def __init__(self, n_rows: int, n_cols: int, entries: Iterable[tuple[int, int, int]] = ()):
        self.n_rows = n_rows
        self.n_cols = n_cols
        self.rows: dict[int, dict[int, int]] = {}
        self.cols: dict[int, set[int]] = {}
        for r, c, v in entries:
            if not (0 <= r < n_rows and 0 <= c < n_cols):
                raise IndexError(f"entry ({r}, {c}) outside a {n_rows}x{n_cols} matrix")
            self.add(r, c, int(v))

    @classmethod
    def from_dense(cls, rows) -> "SparseMatrix":
        rows = [list(map(int, r)) for r in rows]
        n_cols = len(rows[0]) if rows else 0
        return cls(len(rows), n_cols, ((i, j, v) for i, r in enumerate(rows) for j, v in enumerate(r) if v))

    def get(self, r: int, c: int) -> int:
        return self.rows.get(r, {}).get(c, 0)

    def set(self, r: int, c: int, v: int) -> None:
        row = self.rows.setdefault(r, {})
        if v:
            row[c] = v
            self.cols.setdefault(c, set()).add(r)
        else:
            row.pop(c, None)
            if not row:
                del self.rows[r]
            col = self.cols.get(c)
            if col is not None:
                col.discard(r)
                if not col:
                    del self.cols[c]

    def add(self, r: int, c: int, v: int) -> None:
        if v:
            self.set(r, c, self.get(r, c) + v)

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows.values())

    def to_dense(self) -> list[list[int]]:
        return [[self.get(r, c) for c in range(self.n_cols)] for r in range(self.n_rows)]

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.n_cols, self.n_rows,
                            ((c, r, v) for r, row in self.rows.items() for c, v in row.items()))

    def copy(self) -> "SparseMatrix":
        return SparseMatrix(self.n_rows, self.n_cols,
                            ((r, c, v) for r, row in self.rows.items() for c, v in row.items()))


def _row_axpy(M: SparseMatrix, target: int, q: int, source: int) -> None:
    """row[target] -= q * row[source]."""
    for c, v in list(M.rows[source].items()):
        M.set(target, c, M.get(target, c) - q * v)


def _col_axpy(M: SparseMatrix, target: int, q: int, source: int) -> None:
    """col[target] -= q * col[source]."""
    for r in list(M.cols[source]):
        M.set(r, target, M.get(r, target) - q * M.rows[r][source])


def _min_pivot(M: SparseMatrix) -> tuple[int, int]:
    best = None
    for r, row in M.rows.items():
        for c, v in row.items():
            a = abs(v)
            if best is None or a < best[0] or (a == best[0] and (len(row), r, c) < best[1:]):
                best = (a, len(row), r, c)
                if a == 1 and len(row) == 1:
                    return r, c
    return best[2], best[3]


def _clear_row(M: SparseMatrix, r: int) -> None:
    """Zero row ``r``; once its pivot column is clear this is a sequence of column operations."""
    for c in list(M.rows[r]):
        M.set(r, c, 0)


def _unit_pivots(M: SparseMatrix) -> int:
    """Eliminate ±1 pivots by row operations, sparsest first; returns how many."""
    count = 0
    changed = True
    while changed:
        changed = False
        for r in sorted(M.rows, key=lambda r: len(M.rows[r])):
            row = M.rows.get(r)
            if not row:
                continue
            units = [c for c, v in row.items() if abs(v) == 1]
            if not units:
                continue
            c = min(units, key=lambda c: (len(M.cols[c]), c))
            p = row[c]
            for s in list(M.cols[c]):
                if s != r:
                    _row_axpy(M, s, M.rows[s][c] * p, r)
            _clear_row(M, r)
            count += 1
            changed = True
    return count


def _reduce_at(M: SparseMatrix, r: int, c: int) -> int:
    """Row and column operations until ``(r, c)`` is the only entry in its row and column."""
    while True:
        p = M.rows[r][c]
        moved = False
        for s in list(M.cols[c]):
            if s == r:
                continue
            q = M.rows[s][c] // p
            _row_axpy(M, s, q, r)
            if M.get(s, c):
                moved = True
        if moved:
            r = min((s for s in M.cols[c]), key=lambda s: abs(M.rows[s][c]))
            continue
        for cc in list(M.rows[r]):
            if cc == c:
                continue
            q = M.rows[r][cc] // p
            _col_axpy(M, cc, q, c)
            if M.get(r, cc):
                moved = True
        if moved:
            c = min(M.rows[r], key=lambda cc: abs(M.rows[r][cc]))
            continue
        v = abs(p)
        M.set(r, c, 0)
        return v


def diagonal_entries(M: SparseMatrix) -> list[int]:
    """The nonzero diagonal of a Smith form of ``M`` (destroys ``M``), unnormalized."""
    out = [1] * _unit_pivots(M)
    while M.rows:
        r, c = _min_pivot(M)
        out.append(_reduce_at(M, r, c))
    return out


def invariant_factors(diag: Iterable[int]) -> list[int]:
    """Normalize a diagonal so each entry divides the next, by repeated gcd/lcm swaps."""
    d = sorted(abs(x) for x in diag if x)
    changed = True
    while changed:
        changed = False
        for i in range(len(d)):
            for j in range(i + 1, len(d)):
                a, b = d[i], d[j]
                if b % a:
                    g = gcd(a, b)
                    d[i], d[j] = g, a * b // g
                    changed = True
        d.sort()
    return d


def smith_normal_form(M: SparseMatrix | Mapping | list) -> tuple[int, list[int]]:
    """``(rank, invariant factors)``; the input is not modified."""
    if isinstance(M, SparseMatrix):
        work = M.copy()
    else:
        work = SparseMatrix.from_dense(M)
    d = invariant_factors(diagonal_entries(work))
    return len(d), d
