"""Ideals, Lie-commutators, centers, centralizers and normalizers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from .errors import NotAnIdeal
from .linalg import Echelon
from .subspace import Subspace, annihilator, span, subspace_intersect

if TYPE_CHECKING:
    from .algebra import Algebra


def _solve(A: "Algebra", rows) -> Subspace:
    e = Echelon(A.n, A.field)
    e.extend(rows)
    return A.span(e.nullspace())


def ideal_witness(A: "Algebra", m: Subspace):
    """A triple ``(u, e_i, product)`` showing ``m`` is not two-sided, or None."""
    for u in m.basis:
        for i in range(A.n):
            ei = A.e(i)
            for prod in (A.bracket(u, ei), A.bracket(ei, u)):
                if prod not in m:
                    return (u, ei, prod)
    return None


def is_ideal(A: "Algebra", m: Subspace) -> bool:
    return ideal_witness(A, m) is None


def _require_ideal(A, m, what="subspace"):
    w = ideal_witness(A, m)
    if w is not None:
        raise NotAnIdeal(f"{what} is not a two-sided ideal", w)


def ideal_closure(A: "Algebra", S: Subspace) -> Subspace:
    """Smallest two-sided ideal containing ``S``."""
    e = Echelon(A.n, A.field)
    todo = list(S.basis)
    for v in todo:
        e.add(v)
    basis = A.basis()
    while todo:
        u = todo.pop()
        for ei in basis:
            for prod in (A.bracket(u, ei), A.bracket(ei, u)):
                if e.add(prod):
                    todo.append(prod)
    return Subspace(A.n, A.field, e.dense_rows())


def subalgebra_closure(A: "Algebra", vectors) -> Subspace:
    """Smallest subalgebra containing ``vectors``."""
    e = Echelon(A.n, A.field)
    gens = [v for v in vectors if e.add(v)]
    elems = list(gens)
    i = 0
    while i < len(elems):
        x = elems[i]
        for y in elems[: i + 1]:
            for prod in (A.bracket(x, y), A.bracket(y, x)):
                if e.add(prod):
                    elems.append(prod)
        i += 1
    return Subspace(A.n, A.field, e.dense_rows())


def is_subalgebra(A: "Algebra", S: Subspace) -> bool:
    return all(A.bracket(u, v) in S for u in S.basis for v in S.basis)


def lie_commutator_ideal(A: "Algebra", m: Subspace, n: Subspace) -> Subspace:
    """``[m, n]_Lie``: the ideal generated by ``[u, v]_lie``, u in m, v in n."""
    _require_ideal(A, m, "first argument")
    _require_ideal(A, n, "second argument")
    gens = [A.lie_bracket(u, v) for u in m.basis for v in n.basis]
    return ideal_closure(A, A.span(gens))


def gamma2(A: "Algebra") -> Subspace:
    return lie_commutator_ideal(A, A.full, A.full)


def derived_ideal(A: "Algebra") -> Subspace:
    """The ordinary derived ideal ``[g, g]``."""
    return A.span(A.c[i][j] for i in range(A.n) for j in range(A.n))


def lie_centralizer(A: "Algebra", m: Subspace, n: Subspace) -> Subspace:
    """``{g : [g, u]_lie in n for every u in m}``."""
    W = annihilator(n).basis
    F, s = A.field, A.sym
    rows = []
    for u in m.basis:
        nz = [b for b in range(A.n) if u[b]]
        for w in W:
            row = []
            for a in range(A.n):
                acc = 0
                for b in nz:
                    acc += u[b] * sum(wk * sk for wk, sk in zip(w, s[a][b]) if wk and sk)
                row.append(F.reduce(F.zero + acc))
            rows.append(row)
    return _solve(A, rows)


def lie_center(A: "Algebra") -> Subspace:
    """``Z_Lie = {z : [g, z]_lie = 0 for all g}``."""
    s = A.sym
    rows = [[s[i][j][k] for j in range(A.n)] for i in range(A.n) for k in range(A.n)]
    return _solve(A, rows)


@dataclass(frozen=True)
class ClassicalCenters:
    Z_left: Subspace
    Z_right: Subspace
    Z: Subspace
    left_is_subalgebra: bool

    @property
    def is_subalgebra(self) -> bool:
        return self.left_is_subalgebra


def right_center(A: "Algebra") -> Subspace:
    c = A.c
    return _solve(A, [[c[i][j][k] for j in range(A.n)] for i in range(A.n) for k in range(A.n)])


def left_center(A: "Algebra") -> Subspace:
    c = A.c
    return _solve(A, [[c[j][i][k] for j in range(A.n)] for i in range(A.n) for k in range(A.n)])


def classical_centers(A: "Algebra") -> ClassicalCenters:
    """Right center ``{x : [g,x]=0}``, left center ``{x : [x,g]=0}`` and their meet."""
    zr = right_center(A)
    zl = left_center(A)
    return ClassicalCenters(zl, zr, subspace_intersect(zl, zr), is_subalgebra(A, zl))


def lie_normalizer(A: "Algebra", m: Subspace) -> Subspace:
    """``{g : [g, u] in m and [u, g] in m for all u in m}``."""
    W = annihilator(m).basis
    F, c, n = A.field, A.c, A.n
    rows = []
    for u in m.basis:
        for w in W:
            # [g,u] = sum_a g_a sum_b u_b c[a][b];  [u,g] = sum_a g_a sum_b u_b c[b][a]
            r1, r2 = [], []
            for a in range(n):
                x1 = x2 = 0
                for b in range(n):
                    if u[b]:
                        x1 += u[b] * sum(wk * ck for wk, ck in zip(w, c[a][b]))
                        x2 += u[b] * sum(wk * ck for wk, ck in zip(w, c[b][a]))
                r1.append(F.reduce(F.zero + x1))
                r2.append(F.reduce(F.zero + x2))
            rows += [r1, r2]
    return _solve(A, rows)


def image_of(A: "Algebra", linmap, S: Subspace, target_dim: int) -> Subspace:
    return span(target_dim, (linmap(u) for u in S.basis), A.field)
