"""Canonical subspaces of K^n and their lattice operations."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import DimensionMismatch, FieldMismatch
from .fields import Field
from .linalg import Echelon


@dataclass(frozen=True)
class Subspace:
    """A subspace stored by its reduced row-echelon basis.

    Two Subspace objects are equal exactly when they are the same subspace,
    so plain ``==`` works as subspace equality.
    """

    ambient_dim: int
    field: Field
    basis: tuple[tuple, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return len(self.basis)

    @cached_property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(k for k, v in enumerate(row) if v) for row in self.basis)

    @property
    def is_zero(self) -> bool:
        return not self.basis

    @property
    def is_full(self) -> bool:
        return len(self.basis) == self.ambient_dim

    def _echelon(self) -> Echelon:
        e = Echelon(self.ambient_dim, self.field)
        for p, row in zip(self.pivots, self.basis):
            e.rows[p] = {k: v for k, v in enumerate(row) if v}
        return e

    def residue(self, x: Sequence) -> tuple:
        """Canonical representative of ``x`` modulo this subspace.

        The result is supported on the non-pivot columns only.
        """
        _check_len(x, self.ambient_dim)
        F = self.field
        v = list(x)
        for p, row in zip(self.pivots, self.basis):
            a = v[p]
            if a:
                v = [F.reduce(vi - a * ri) for vi, ri in zip(v, row)]
        return tuple(v)

    def __contains__(self, x) -> bool:
        if isinstance(x, Subspace):
            return all(self.__contains__(r) for r in x.basis)
        return not any(self.residue(x))

    def coordinates(self, x: Sequence) -> tuple:
        """Coefficients of ``x`` in the echelon basis. ``x`` must lie in the subspace."""
        if x not in self:
            raise ValueError("vector is not in the subspace")
        return tuple(x[p] for p in self.pivots)

    def combination(self, coeffs: Sequence) -> tuple:
        F = self.field
        out = [F.zero] * self.ambient_dim
        for c, row in zip(coeffs, self.basis):
            if c:
                out = [F.reduce(o + c * r) for o, r in zip(out, row)]
        return tuple(out)

    def complement_indices(self) -> tuple[int, ...]:
        """Standard basis indices completing the echelon basis (non-pivot columns)."""
        piv = set(self.pivots)
        return tuple(j for j in range(self.ambient_dim) if j not in piv)

    def __repr__(self) -> str:
        rows = ", ".join("(" + ",".join(str(v) for v in r) + ")" for r in self.basis)
        return f"Subspace(dim={self.dim}/{self.ambient_dim}, {self.field.name}, [{rows}])"


def _check_len(x, n):
    if len(x) != n:
        raise DimensionMismatch(f"vector of length {len(x)} in ambient dimension {n}")


def span(ambient_dim: int, vectors: Iterable[Sequence], field: Field) -> Subspace:
    e = Echelon(ambient_dim, field)
    for v in vectors:
        _check_len(v, ambient_dim)
        e.add(v)
    return Subspace(ambient_dim, field, e.dense_rows())


def zero_space(n: int, field: Field) -> Subspace:
    return Subspace(n, field, ())


def full_space(n: int, field: Field) -> Subspace:
    return span(n, standard_basis(n, field), field)


def standard_basis(n: int, field: Field) -> list[tuple]:
    return [tuple(field.one if i == j else field.zero for j in range(n)) for i in range(n)]


def _same_ambient(U: Subspace, V: Subspace):
    if U.ambient_dim != V.ambient_dim:
        raise DimensionMismatch(f"ambient dimensions {U.ambient_dim} and {V.ambient_dim} differ")
    if U.field != V.field:
        raise FieldMismatch(f"{U.field.name} vs {V.field.name}")


def subspace_sum(*spaces: Subspace) -> Subspace:
    U = spaces[0]
    for V in spaces[1:]:
        _same_ambient(U, V)
    return span(U.ambient_dim, (r for S in spaces for r in S.basis), U.field)


def annihilator(U: Subspace) -> Subspace:
    """``{w : w . u = 0 for all u in U}`` under the standard pairing."""
    e = U._echelon()
    return Subspace(U.ambient_dim, U.field, _canon(e.nullspace(), U))


def _canon(vectors, U):
    return span(U.ambient_dim, vectors, U.field).basis


def subspace_intersect(*spaces: Subspace) -> Subspace:
    U = spaces[0]
    for V in spaces[1:]:
        _same_ambient(U, V)
    if len(spaces) == 1:
        return U
    return annihilator(subspace_sum(*(annihilator(S) for S in spaces)))


def contains(U: Subspace, x) -> bool:
    if isinstance(x, Subspace):
        _same_ambient(U, x)
    return x in U


def quotient_coords(U: Subspace, x: Sequence) -> tuple:
    """Coordinates of ``x + U`` in the basis of complement standard vectors."""
    r = U.residue(x)
    return tuple(r[j] for j in U.complement_indices())


def image(vectors_of: callable, U: Subspace, target_dim: int) -> Subspace:
    """Span of ``vectors_of(u)`` over the basis of ``U``."""
    return span(target_dim, (vectors_of(u) for u in U.basis), U.field)
