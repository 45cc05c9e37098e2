"""Matrices acting on algebra coordinates (column convention)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionMismatch
from .fields import Field
from .linalg import identity as _identity, matmul, matvec


@dataclass(frozen=True)
class LinearMap:
    """``d(e_j) = sum_i M[i][j] e_i``; ``M`` has ``rows`` x ``cols`` entries."""

    field: Field
    M: tuple[tuple, ...]
    cols: int = -1

    def __post_init__(self):
        if self.cols < 0:
            object.__setattr__(self, "cols", len(self.M[0]) if self.M else 0)
        if any(len(r) != self.cols for r in self.M):
            raise DimensionMismatch("ragged matrix")

    @property
    def rows(self) -> int:
        return len(self.M)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @classmethod
    def zero(cls, rows: int, field: Field, cols: int | None = None) -> "LinearMap":
        cols = rows if cols is None else cols
        return cls(field, tuple(tuple(field.zero for _ in range(cols)) for _ in range(rows)), cols)

    @classmethod
    def identity(cls, n: int, field: Field) -> "LinearMap":
        return cls(field, _identity(n, field), n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], field: Field, rows: int) -> "LinearMap":
        M = tuple(tuple(col[i] for col in columns) for i in range(rows))
        return cls(field, M, len(columns))

    @classmethod
    def from_flat(cls, n: int, flat: Sequence, field: Field) -> "LinearMap":
        return cls(field, tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n)), n)

    def flat(self) -> tuple:
        return tuple(v for row in self.M for v in row)

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self.M)

    def __call__(self, x: Sequence) -> tuple:
        if len(x) != self.cols:
            raise DimensionMismatch(f"map expects length {self.cols}, got {len(x)}")
        return matvec(self.M, x, self.field)

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot compose {self.shape} with {other.shape}")
        return LinearMap(self.field, matmul(self.M, other.M, self.field), other.cols)

    def _zip(self, other, op):
        if self.shape != other.shape:
            raise DimensionMismatch(f"shapes {self.shape} and {other.shape} differ")
        F = self.field
        return LinearMap(
            F, tuple(tuple(F.reduce(op(a, b)) for a, b in zip(r, s)) for r, s in zip(self.M, other.M)), self.cols
        )

    def __add__(self, other):
        return self._zip(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._zip(other, lambda a, b: a - b)

    def scale(self, c) -> "LinearMap":
        F = self.field
        return LinearMap(F, tuple(tuple(F.reduce(c * a) for a in r) for r in self.M), self.cols)

    def __neg__(self):
        return self.scale(-1)

    @property
    def is_zero(self) -> bool:
        return not any(any(r) for r in self.M)

    def power(self, k: int) -> "LinearMap":
        out = LinearMap.identity(self.rows, self.field)
        for _ in range(k):
            out = out @ self
        return out

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(v) for v in r) for r in self.M)
        return f"LinearMap[{self.rows}x{self.cols}]({body})"


def map_commutator(d1: LinearMap, d2: LinearMap) -> LinearMap:
    """``[d1, d2] = d1 d2 - d2 d1``."""
    return (d1 @ d2) - (d2 @ d1)
