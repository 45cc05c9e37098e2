"""Exact row reduction over a :class:`~leiblab.fields.Field`.

Rows are sparse ``{column: value}`` dicts while eliminating; results come
back as dense tuples. The reduced form is kept fully reduced (every pivot
column is zero in every other row) so adding a row costs one pass.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .fields import Field


class Echelon:
    """Incremental reduced row-echelon form of a growing set of rows."""

    def __init__(self, ncols: int, field: Field):
        self.ncols = ncols
        self.field = field
        self.rows: dict[int, dict[int, object]] = {}

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, row: dict) -> dict:
        """Return ``row`` minus its projection on the current pivots."""
        F = self.field
        r = {k: v for k, v in row.items() if v}
        for col in [c for c in r if c in self.rows]:
            a = r.get(col)
            if not a:
                continue
            for k, v in self.rows[col].items():
                nv = F.reduce(r.get(k, 0) - a * v)
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
        return r

    def add(self, row) -> bool:
        """Insert a row (dict or dense sequence); True if the rank grew."""
        if not isinstance(row, dict):
            row = {k: v for k, v in enumerate(row) if v}
        r = self.reduce(row)
        if not r:
            return False
        F = self.field
        piv = min(r)
        inv = F.inv(r[piv])
        if inv != 1:
            r = {k: F.reduce(v * inv) for k, v in r.items()}
        for other in self.rows.values():
            a = other.get(piv)
            if a:
                for k, v in r.items():
                    nv = F.reduce(other.get(k, 0) - a * v)
                    if nv:
                        other[k] = nv
                    else:
                        other.pop(k, None)
        self.rows[piv] = r
        return True

    def extend(self, rows: Iterable) -> None:
        for r in rows:
            self.add(r)

    @property
    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def dense_rows(self) -> tuple[tuple, ...]:
        z = self.field.zero
        out = []
        for p in self.pivots:
            row = [z] * self.ncols
            for k, v in self.rows[p].items():
                row[k] = v
            out.append(tuple(row))
        return tuple(out)

    def nullspace(self) -> list[tuple]:
        """Basis of ``{x : row . x = 0 for every row}``."""
        F = self.field
        pivots = set(self.rows)
        basis = []
        for f in range(self.ncols):
            if f in pivots:
                continue
            v = [F.zero] * self.ncols
            v[f] = F.one
            for p, row in self.rows.items():
                a = row.get(f)
                if a:
                    v[p] = F.reduce(-a)
            basis.append(tuple(v))
        return basis


def rref(rows: Iterable, ncols: int, field: Field) -> tuple[tuple, ...]:
    e = Echelon(ncols, field)
    e.extend(rows)
    return e.dense_rows()


def rank(rows: Iterable, ncols: int, field: Field) -> int:
    e = Echelon(ncols, field)
    e.extend(rows)
    return len(e)


def nullspace(rows: Iterable, ncols: int, field: Field) -> list[tuple]:
    e = Echelon(ncols, field)
    e.extend(rows)
    return e.nullspace()


def matmul(A: Sequence[Sequence], B: Sequence[Sequence], field: Field) -> tuple:
    if not A:
        return ()
    m = len(B[0]) if B else 0
    out = []
    for row in A:
        out.append(
            tuple(field.reduce(sum(row[k] * B[k][j] for k in range(len(B)) if row[k])) for j in range(m))
        )
    return tuple(out)


def matvec(A: Sequence[Sequence], x: Sequence, field: Field) -> tuple:
    return tuple(field.reduce(sum(a * b for a, b in zip(row, x) if a and b)) for row in A)


def identity(n: int, field: Field) -> tuple:
    return tuple(tuple(field.one if i == j else field.zero for j in range(n)) for i in range(n))


def inverse(A: Sequence[Sequence], field: Field):
    """Inverse of a square matrix, or None if singular."""
    n = len(A)
    e = Echelon(2 * n, field)
    one = field.one
    for i, row in enumerate(A):
        e.add(list(row) + [one if j == i else field.zero for j in range(n)])
    if e.pivots[:n] != list(range(n)) or any(p >= n for p in e.pivots):
        return None
    return tuple(r[n:] for r in e.dense_rows())


def solve(A: Sequence[Sequence], b: Sequence, field: Field):
    """One solution ``x`` of ``A x = b`` or None when inconsistent."""
    ncols = len(A[0]) if A else 0
    e = Echelon(ncols + 1, field)
    for row, bi in zip(A, b):
        e.add(list(row) + [bi])
    if ncols in e.rows:
        return None
    x = [field.zero] * ncols
    for p, row in e.rows.items():
        x[p] = row.get(ncols, field.zero)
    return tuple(x)
