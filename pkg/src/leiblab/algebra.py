"""Leibniz algebras given by structure constants.

A (right) Leibniz algebra satisfies ``[x,[y,z]] = [[x,y],z] - [[x,z],y]``.
Indices are 0-based throughout the library; files and messages use 1-based
names ``a1 .. an``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Mapping, Sequence

from .errors import DimensionMismatch, FieldMismatch, IndexOutOfRange, LeibnizViolation, NotAnIdeal
from .fields import Field
from .linmap import LinearMap
from .subspace import Subspace, full_space, quotient_coords, span, zero_space


def _leibniz_witness(n, F, c):
    """First basis triple (i, j, k) violating the identity, or None."""
    nz = [[[m for m in range(n) if c[i][j][m]] for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = [0] * n
                for m in nz[j][k]:
                    a = c[j][k][m]
                    for t in nz[i][m]:
                        lhs[t] += a * c[i][m][t]
                rhs = [0] * n
                for m in nz[i][j]:
                    a = c[i][j][m]
                    for t in nz[m][k]:
                        rhs[t] += a * c[m][k][t]
                for m in nz[i][k]:
                    a = c[i][k][m]
                    for t in nz[m][j]:
                        rhs[t] -= a * c[m][j][t]
                lhs = [F.reduce(F.zero + v) for v in lhs]
                rhs = [F.reduce(F.zero + v) for v in rhs]
                if lhs != rhs:
                    return i, j, k, lhs, rhs
    return None


@dataclass(frozen=True)
class Algebra:
    """Dense structure constants: ``[e_i, e_j] = sum_k c[i][j][k] e_k``."""

    n: int
    field: Field
    c: tuple
    labels: tuple[str, ...] = dc_field(default=(), compare=False)

    def __post_init__(self):
        n, F = self.n, self.field
        if n < 0:
            raise ValueError("dimension must be non-negative")
        if len(self.c) != n or any(len(r) != n or any(len(v) != n for v in r) for r in self.c):
            raise DimensionMismatch(f"structure tensor is not {n}x{n}x{n}")
        c = tuple(tuple(tuple(F.coerce(v) for v in vec) for vec in row) for row in self.c)
        object.__setattr__(self, "c", c)
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"a{i + 1}" for i in range(n)))
        elif len(self.labels) != n:
            raise DimensionMismatch("one label per basis vector is required")
        else:
            object.__setattr__(self, "labels", tuple(self.labels))
        bad = _leibniz_witness(n, F, c)
        if bad:
            raise LeibnizViolation(*bad)

    # -- vectors -----------------------------------------------------------
    def zero_vector(self) -> tuple:
        return (self.field.zero,) * self.n

    def e(self, i: int) -> tuple:
        if not 0 <= i < self.n:
            raise IndexOutOfRange(f"basis index {i} outside 0..{self.n - 1}")
        F = self.field
        return tuple(F.one if k == i else F.zero for k in range(self.n))

    def vector(self, coeffs: Sequence) -> tuple:
        if len(coeffs) != self.n:
            raise DimensionMismatch(f"expected {self.n} coordinates, got {len(coeffs)}")
        return tuple(self.field.coerce(v) for v in coeffs)

    def basis(self) -> list[tuple]:
        return [self.e(i) for i in range(self.n)]

    @property
    def full(self) -> Subspace:
        return full_space(self.n, self.field)

    @property
    def zero(self) -> Subspace:
        return zero_space(self.n, self.field)

    def span(self, vectors) -> Subspace:
        return span(self.n, vectors, self.field)

    # -- products ----------------------------------------------------------
    @cached_property
    def sym(self) -> tuple:
        """``s[a][b] = [e_a, e_b] + [e_b, e_a]`` (structure of the lie-bracket)."""
        F, c, n = self.field, self.c, self.n
        return tuple(
            tuple(tuple(F.reduce(c[a][b][k] + c[b][a][k]) for k in range(n)) for b in range(n)) for a in range(n)
        )

    def _contract(self, t, x, y) -> tuple:
        if len(x) != self.n or len(y) != self.n:
            raise DimensionMismatch(f"vectors must have {self.n} coordinates")
        F, n = self.field, self.n
        out = [F.zero] * n
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                a = xi * yj
                for k, v in enumerate(t[i][j]):
                    if v:
                        out[k] += a * v
        return tuple(F.reduce(v) for v in out)

    def bracket(self, x, y) -> tuple:
        return self._contract(self.c, x, y)

    def lie_bracket(self, x, y) -> tuple:
        return self._contract(self.sym, x, y)

    def right_matrix(self, x) -> LinearMap:
        """``R_x(y) = [y, x]``."""
        return LinearMap.from_columns([self.bracket(ej, x) for ej in self.basis()], self.field, self.n)

    def left_matrix(self, x) -> LinearMap:
        """``L_x(y) = [x, y]``."""
        return LinearMap.from_columns([self.bracket(x, ej) for ej in self.basis()], self.field, self.n)

    @cached_property
    def is_lie(self) -> bool:
        return not any(any(v) for row in self.sym for v in row)

    @cached_property
    def is_abelian(self) -> bool:
        return not any(any(v) for row in self.c for v in row)

    def over(self, field: Field) -> "Algebra":
        """The same structure constants read in another field."""
        return Algebra(self.n, field, self.c, self.labels)

    def __repr__(self) -> str:
        terms = []
        for i in range(self.n):
            for j in range(self.n):
                if any(self.c[i][j]):
                    terms.append(f"[{self.labels[i]},{self.labels[j]}]={_vec_str(self.c[i][j], self.labels)}")
        return f"Algebra(n={self.n}, {self.field.name}, {'; '.join(terms) or 'abelian'})"


def _vec_str(v, labels) -> str:
    parts = []
    for k, a in enumerate(v):
        if a:
            parts.append(labels[k] if a == 1 else f"{a}*{labels[k]}")
    return "+".join(parts) or "0"


def build_algebra(
    n: int,
    field: Field,
    sparse_brackets: Mapping[tuple[int, int], object] | None = None,
    labels: Sequence[str] | None = None,
) -> Algebra:
    """Build from ``{(i, j): value}`` with 0-based indices.

    ``value`` is either a dense coordinate sequence or a ``{k: coeff}`` map.
    """
    z = field.zero
    c = [[[z] * n for _ in range(n)] for _ in range(n)]
    for (i, j), val in (sparse_brackets or {}).items():
        for idx in (i, j):
            if not 0 <= idx < n:
                raise IndexOutOfRange(f"bracket index {idx + 1} outside 1..{n}")
        items = val.items() if isinstance(val, Mapping) else enumerate(val)
        if not isinstance(val, Mapping) and len(val) != n:
            raise DimensionMismatch(f"bracket value must have {n} coordinates")
        for k, coeff in items:
            if not 0 <= k < n:
                raise IndexOutOfRange(f"bracket target index {k + 1} outside 1..{n}")
            c[i][j][k] = field.reduce(c[i][j][k] + field.coerce(coeff))
    return Algebra(n, field, tuple(tuple(tuple(v) for v in r) for r in c), tuple(labels or ()))


def bracket(A: Algebra, x, y) -> tuple:
    return A.bracket(x, y)


def lie_bracket(A: Algebra, x, y) -> tuple:
    return A.lie_bracket(x, y)


def ann_ideal(A: Algebra) -> Subspace:
    """``g^ann = span{[x,x]}``, by polarisation ``[x,y]+[y,x]`` over basis pairs."""
    from .lattice import ideal_closure

    gens = [A.sym[a][b] for a in range(A.n) for b in range(a, A.n)]
    return ideal_closure(A, A.span(gens))


def quotient_algebra(A: Algebra, m: Subspace) -> tuple[Algebra, LinearMap]:
    """``A/m`` on the complement standard basis, and the projection ``A -> A/m``."""
    from .lattice import ideal_witness

    w = ideal_witness(A, m)
    if w is not None:
        raise NotAnIdeal(f"subspace is not a two-sided ideal: product {w[2]} of basis pair leaves it", w)
    idx = m.complement_indices()
    k = len(idx)
    F = A.field
    c = tuple(
        tuple(quotient_coords(m, A.c[idx[a]][idx[b]]) for b in range(k)) for a in range(k)
    )
    Q = Algebra(k, F, c, tuple(A.labels[i] + "~" for i in idx))
    proj = LinearMap.from_columns([quotient_coords(m, A.e(j)) for j in range(A.n)], F, k)
    return Q, proj


def liezation(A: Algebra) -> tuple[Algebra, LinearMap]:
    return quotient_algebra(A, ann_ideal(A))


def direct_sum(A: Algebra, B: Algebra) -> Algebra:
    if A.field != B.field:
        raise FieldMismatch(f"cannot add algebras over {A.field.name} and {B.field.name}")
    n = A.n + B.n
    z = A.field.zero
    c = [[[z] * n for _ in range(n)] for _ in range(n)]
    for i in range(A.n):
        for j in range(A.n):
            c[i][j][: A.n] = A.c[i][j]
    for i in range(B.n):
        for j in range(B.n):
            c[A.n + i][A.n + j][A.n:] = B.c[i][j]
    la = [f"{s}" for s in A.labels] + [f"{s}'" for s in B.labels]
    if len(set(la)) != n:
        la = [f"e{i + 1}" for i in range(n)]
    return Algebra(n, A.field, tuple(tuple(tuple(v) for v in r) for r in c), tuple(la))


def abelian(n: int, field: Field) -> Algebra:
    return build_algebra(n, field, {})


def embed_left(A: Algebra, B: Algebra) -> LinearMap:
    """Inclusion of the first summand ``A -> A + B``."""
    F = A.field
    return LinearMap.from_columns([A.e(j) + B.zero_vector() for j in range(A.n)], F, A.n + B.n)


def embed_right(A: Algebra, B: Algebra) -> LinearMap:
    F = A.field
    return LinearMap.from_columns([A.zero_vector() + B.e(j) for j in range(B.n)], F, A.n + B.n)
