"""Multiplication operators and almost-inner Lie-derivations."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .algebra import Algebra, ann_ideal, direct_sum
from .checks import Check, skipped, verdict
from .lattice import classical_centers, gamma2, lie_center, right_center
from .linalg import Echelon, solve
from .linmap import LinearMap, map_commutator
from .maps import MapSpace, derivation_rows, image_rows, maps_spanned, solve_map_space, _pairs_sym
from .series import lower_lie_series, upper_lie_series
from .subspace import Subspace, annihilator, span

EXACT_LIMIT = 10 ** 6


def right_mul(A: Algebra, x) -> LinearMap:
    """``R_x(y) = [y, x]``."""
    return A.right_matrix(x)


def left_mul(A: Algebra, x) -> LinearMap:
    """``L_x(y) = [x, y]``."""
    return A.left_matrix(x)


@dataclass(frozen=True)
class InnerFamily:
    R_basis: tuple[LinearMap, ...]
    L_basis: tuple[LinearMap, ...]
    RL_space: MapSpace


def inner_family(A: Algebra) -> InnerFamily:
    R = tuple(right_mul(A, e) for e in A.basis())
    L = tuple(left_mul(A, e) for e in A.basis())
    return InnerFamily(R, L, maps_spanned(A, (r + l for r, l in zip(R, L)), "R+L"))


def right_space(A: Algebra, S: Subspace | None = None) -> MapSpace:
    """``R(S) = {R_x : x in S}`` (all of ``g`` by default)."""
    vecs = A.basis() if S is None else S.basis
    return maps_spanned(A, (right_mul(A, x) for x in vecs), "R")


# -- almost inner ------------------------------------------------------------

def _sample_rows(A: Algebra, x) -> list[dict]:
    """Rows of ``d(x) in [x, g]_lie``."""
    n = A.n
    V = span(n, (A.lie_bracket(x, e) for e in A.basis()), A.field)
    rows = []
    for w in annihilator(V).basis:
        row = {}
        for i in range(n):
            if w[i]:
                for j in range(n):
                    if x[j]:
                        row[i * n + j] = A.field.reduce(w[i] * x[j])
        rows.append(row)
    return rows


def projective_points(A: Algebra):
    """One nonzero vector per line of ``K^n`` (first nonzero coordinate 1)."""
    F, n = A.field, A.n
    for lead in range(n):
        for tail in itertools.product(range(F.p), repeat=n - lead - 1):
            yield (0,) * lead + (1,) + tuple(tail)


def deterministic_samples(A: Algebra) -> list[tuple]:
    """Basis vectors, pairwise sums and a basis of ``Z_Lie``."""
    F = A.field
    basis = A.basis()
    pts = list(basis)
    for i, j in itertools.combinations(range(A.n), 2):
        pts.append(tuple(F.reduce(a + b) for a, b in zip(basis[i], basis[j])))
    pts.extend(lie_center(A).basis)
    return pts


def random_samples(A: Algebra, count: int, seed: int) -> list[tuple]:
    rng = random.Random(seed)
    F = A.field
    return [tuple(F.coerce(rng.randint(-9, 9)) for _ in range(A.n)) for _ in range(count)]


@dataclass(frozen=True)
class AlmostInner:
    space: MapSpace
    certainty: str  # "exact" | "monte_carlo"
    samples: int
    stabilized_at: int  # samples consumed before the last shrink

    def __iter__(self):
        return iter((self.space, self.certainty))


def der_c_from_samples(A: Algebra, samples: Iterable[Sequence], certainty: str = "monte_carlo") -> AlmostInner:
    """``Der^Lie`` cut down by ``d(x) in [x, g]_lie`` at each sample ``x``."""
    n2 = A.n * A.n
    e = Echelon(n2, A.field)
    e.extend(derivation_rows(A, A.sym, _pairs_sym(A.n)))
    count = stab = 0
    for x in samples:
        count += 1
        grew = False
        for row in _sample_rows(A, x):
            grew = e.add(row) or grew
        if grew:
            stab = count
    space = MapSpace(A, span(n2, e.nullspace(), A.field), "der_c")
    return AlmostInner(space, certainty, count, stab)


def der_c(A: Algebra, sample_budget: int = 64, seed: int = 0) -> AlmostInner:
    """Almost inner Lie-derivations ``{d : d(x) in [x, g]_lie for all x}``.

    Exact over GF(p) when ``p**n <= 10**6`` (every line of the space is
    tested). Otherwise a Monte Carlo superset: deterministic samples plus
    ``sample_budget`` seeded random vectors with entries in [-9, 9].
    """
    F = A.field
    if F.is_finite and F.p ** A.n <= EXACT_LIMIT:
        return der_c_from_samples(A, projective_points(A), "exact")
    pts = deterministic_samples(A) + random_samples(A, sample_budget, seed)
    return der_c_from_samples(A, pts, "monte_carlo")


def der_cz(A: Algebra, sample_budget: int = 64, seed: int = 0, dc: AlmostInner | None = None) -> AlmostInner:
    """Central almost inner: ``Der_c ∩ (R(Z^l) + Hom(g, Z_Lie))``."""
    dc = dc or der_c(A, sample_budget, seed)
    zl = classical_centers(A).Z_left
    hom = solve_map_space(A, image_rows(A, lie_center(A)), "hom")
    allowed = right_space(A, zl) + hom
    return AlmostInner(dc.space.intersect(allowed, "der_cz"), dc.certainty, dc.samples, dc.stabilized_at)


# -- property suite ------------------------------------------------------------

def standard_ideals(A: Algebra) -> list[tuple[str, Subspace]]:
    """Two-sided ideals available without search: series terms and centers."""
    out = [("g^ann", ann_ideal(A)), ("Z_Lie", lie_center(A)), ("Z^r", right_center(A))]
    for i, t in enumerate(lower_lie_series(A).terms):
        out.append((f"gamma_{i + 1}", t))
    for i, t in enumerate(upper_lie_series(A).terms):
        out.append((f"Z_{i}", t))
    return out


def _restricts_to_right_mult(A: Algebra, d: LinearMap, zl: Subspace, g2: Subspace) -> bool:
    """Is ``d|gamma_2 = R_x|gamma_2`` for some ``x`` in ``Z^l``?"""
    if not g2.basis:
        return True
    Rs = [right_mul(A, z) for z in zl.basis]
    # unknown t_k: sum_k t_k R_{z_k}(u) = d(u) for every u in gamma_2
    rows, rhs = [], []
    for u in g2.basis:
        cols = [R(u) for R in Rs]
        du = d(u)
        for i in range(A.n):
            rows.append([c[i] for c in cols])
            rhs.append(du[i])
    if not Rs:
        return not any(rhs)
    return solve(rows, rhs, A.field) is not None


def _map_lie_series_reaches_zero(S: MapSpace, bound: int) -> tuple[bool, int]:
    """Iterate ``C_1 = S``, ``C_{k+1} = span [C_k, S]``; (reached zero, length)."""
    A = S.ambient
    cur = S
    for k in range(1, bound + 2):
        if cur.dim == 0:
            return True, k
        nxt = maps_spanned(A, (map_commutator(a, b) for a in cur.basis for b in S.basis))
        if nxt == cur:
            return False, k
        cur = nxt
    return False, bound


def almost_inner_suite(
    A: Algebra,
    sample_budget: int = 64,
    seed: int = 0,
    partner: Algebra | None = None,
    ideals: list[tuple[str, Subspace]] | None = None,
) -> list[Check]:
    dc = der_c(A, sample_budget, seed)
    cz = der_cz(A, sample_budget, seed, dc)
    cert = dc.certainty
    g2, zlie = gamma2(A), lie_center(A)
    zl = classical_centers(A).Z_left
    D = dc.space.basis
    out: list[Check] = []

    out.append(verdict("der_c image in gamma_2", all(d(x) in g2 for d in D for x in A.basis()), certainty=cert))
    out.append(verdict("der_c kills Z_Lie", all(not any(d(z)) for d in D for z in zlie.basis), certainty=cert))
    bad = [nm for nm, I in (ideals if ideals is not None else standard_ideals(A))
           if not all(d(u) in I for d in D for u in I.basis)]
    out.append(verdict("der_c preserves ideals", not bad, ", ".join(bad), cert))

    ok_b = all(_restricts_to_right_mult(A, d, zl, g2) for d in cz.space.basis)
    out.append(verdict("der_cz agrees with some R_x on gamma_2", ok_b, certainty=cert))

    if g2 in zlie:
        out.append(verdict("2-step: der_cz = der_c", cz.space == dc.space, f"dims {cz.space.dim}/{dc.space.dim}", cert))
    else:
        out.append(skipped("2-step: der_cz = der_c", "not 2-step Lie-nilpotent"))

    if zlie.is_zero:
        Rg, Rzl = right_space(A), right_space(A, zl)
        out.append(verdict("Z_Lie = 0: der_cz in R(g)", cz.space <= Rg, certainty=cert))
        out.append(verdict("Z_Lie = 0: R(Z^l) in der_cz", Rzl <= cz.space, certainty=cert))
    else:
        out.append(skipped("Z_Lie = 0: der_cz in R(g)", "Z_Lie != 0"))
        out.append(skipped("Z_Lie = 0: R(Z^l) in der_cz", "Z_Lie != 0"))

    lower = lower_lie_series(A)
    if lower.last.is_zero:
        c = len(lower.terms) - 1
        nil = all(d.power(c).is_zero for d in D)
        out.append(verdict("nilpotent: d^c = 0", nil, f"c={c}", cert))
        reached, steps = _map_lie_series_reaches_zero(dc.space, A.n * A.n)
        out.append(verdict("nilpotent: der_c Lie-nilpotent", reached, f"commutator series length {steps}", cert))
    else:
        out.append(skipped("nilpotent: d^c = 0", "not Lie-nilpotent"))
        out.append(skipped("nilpotent: der_c Lie-nilpotent", "not Lie-nilpotent"))

    if partner is not None:
        out.append(der_c_additivity(A, partner, sample_budget, seed))
    return out


def der_c_additivity(A: Algebra, B: Algebra, sample_budget: int = 64, seed: int = 0) -> Check:
    """``dim Der_c(A + B) = dim Der_c(A) + dim Der_c(B)``."""
    S = direct_sum(A, B)
    da, db, ds = (der_c(X, sample_budget, seed) for X in (A, B, S))
    cert = "exact" if all(d.certainty == "exact" for d in (da, db, ds)) else "monte_carlo"
    return verdict(
        "der_c additive over direct sums",
        ds.space.dim == da.space.dim + db.space.dim,
        f"{ds.space.dim} = {da.space.dim} + {db.space.dim}",
        cert,
    )


# name used by the public interface description
prop516_suite = almost_inner_suite
