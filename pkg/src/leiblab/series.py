"""Lower and upper Lie-central series, nilpotency class and related predicates."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import Algebra, quotient_algebra
from .errors import NotAnIdeal
from .lattice import (
    derived_ideal,
    gamma2,
    ideal_witness,
    lie_center,
    lie_centralizer,
    lie_commutator_ideal,
    subalgebra_closure,
)
from .subspace import Subspace


@dataclass(frozen=True)
class SeriesChain:
    terms: tuple[Subspace, ...]
    direction: str  # "descending" | "ascending"
    stabilized_at: int

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(t.dim for t in self.terms)

    def __getitem__(self, i: int) -> Subspace:
        return self.terms[i]

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def last(self) -> Subspace:
        return self.terms[-1]


def lower_lie_series(A: Algebra, n_ideal: Subspace | None = None) -> SeriesChain:
    """``gamma_1 = n``, ``gamma_{i+1} = [gamma_i, g]_Lie``.

    Stops once a term is zero (listed once) or repeats (the repeat is listed).
    """
    start = A.full if n_ideal is None else n_ideal
    w = ideal_witness(A, start)
    if w is not None:
        raise NotAnIdeal("series must start at a two-sided ideal", w)
    terms = [start]
    for _ in range(A.n + 1):
        cur = terms[-1]
        if cur.is_zero:
            return SeriesChain(tuple(terms), "descending", len(terms) - 1)
        nxt = lie_commutator_ideal(A, cur, A.full)
        terms.append(nxt)
        if nxt == cur:
            return SeriesChain(tuple(terms), "descending", len(terms) - 2)
    raise AssertionError("lower series did not stabilize")


def upper_lie_series(A: Algebra) -> SeriesChain:
    """``Z_0 = 0``, ``Z_i = C_g^Lie(g, Z_{i-1})``."""
    terms = [A.zero]
    for _ in range(A.n + 1):
        cur = terms[-1]
        if cur.is_full:
            return SeriesChain(tuple(terms), "ascending", len(terms) - 1)
        nxt = lie_centralizer(A, A.full, cur)
        terms.append(nxt)
        if nxt == cur:
            return SeriesChain(tuple(terms), "ascending", len(terms) - 2)
    raise AssertionError("upper series did not stabilize")


@dataclass(frozen=True)
class ClassReport:
    nilpotent: bool
    class_c: int | None
    stem: bool
    filiform: bool
    p_generators: int
    method: str
    p_algebra: int
    upper_class: int | None
    consistent: bool


def _lower_class(ch: SeriesChain) -> int | None:
    return len(ch.terms) - 1 if ch.last.is_zero else None


def _upper_class(ch: SeriesChain) -> int | None:
    return len(ch.terms) - 1 if ch.last.is_full else None


def lie_nilpotency_class(A: Algebra) -> ClassReport:
    lower = lower_lie_series(A)
    upper = upper_lie_series(A)
    c_low, c_up = _lower_class(lower), _upper_class(upper)
    Q, _ = quotient_algebra(A, lie_center(A))
    p_alg, method = min_generators(Q)
    return ClassReport(
        nilpotent=c_low is not None,
        class_c=c_low,
        stem=is_lie_stem(A),
        filiform=is_lie_filiform(A, lower),
        p_generators=Q.n,
        method=method,
        p_algebra=p_alg,
        upper_class=c_up,
        consistent=c_low == c_up,
    )


def is_lie_stem(A: Algebra) -> bool:
    """``Z_Lie(g)`` is contained in ``[g, g]_Lie``."""
    return lie_center(A) in gamma2(A)


def is_lie_perfect_ideal(A: Algebra, m: Subspace) -> bool:
    return lie_commutator_ideal(A, m, m) == m


def is_lie_filiform(A: Algebra, lower: SeriesChain | None = None) -> bool:
    """``dim gamma_i = n - i`` for ``2 <= i <= n`` (requires ``n >= 2``)."""
    n = A.n
    if n < 2:
        return False
    lower = lower or lower_lie_series(A)
    for i in range(2, n + 1):
        d = lower[i - 1].dim if i - 1 < len(lower) else lower.last.dim
        if d != n - i:
            return False
    return True


def _candidate_pool(A: Algebra):
    """Generator candidates, normalised so the first nonzero coordinate is 1.

    Returns ``(pool, complete)`` where ``complete`` means the pool contains a
    representative of every line of the space.
    """
    F, n = A.field, A.n
    if F.is_finite and F.p ** n <= 4096:
        values = list(range(F.p))
        complete = True
    else:
        values = [F.coerce(v) for v in (0, 1, -1)]
        complete = False
    pool = []
    for lead in range(n):
        for tail in itertools.product(values, repeat=n - lead - 1):
            pool.append((F.zero,) * lead + (F.one,) + tuple(tail))
    return pool, complete


def min_generators(A: Algebra, budget: int = 20_000, mode: str = "algebra") -> tuple[int, str]:
    """Smallest number of elements generating ``A``.

    ``mode="algebra"`` counts generators of ``A`` as an algebra (subalgebra
    closure). ``mode="span"`` counts vector-space generators, i.e. ``dim A``.
    The method is ``exact`` when minimality is certain, ``brute`` when a
    non-exhaustive search found the value, and ``upper_bound`` otherwise.
    """
    n = A.n
    if mode == "span" or n == 0:
        return n, "exact"
    if mode != "algebra":
        raise ValueError(f"unknown mode {mode!r}")
    lower = max(1, n - derived_ideal(A).dim)
    if lower == n:
        return n, "exact"
    if n > 5:
        return n, "upper_bound"
    pool, complete = _candidate_pool(A)
    spent = 0
    exhaustive_below = True
    for k in range(lower, n):
        finished = True
        for combo in itertools.combinations(pool, k):
            spent += 1
            if spent > budget:
                finished = False
                break
            if subalgebra_closure(A, combo).dim == n:
                if k == lower or (exhaustive_below and complete):
                    return k, "exact"
                return k, "brute"
        exhaustive_below = exhaustive_below and finished
        if not finished:
            break
    if exhaustive_below and complete:
        return n, "exact"
    return n, "upper_bound" if not exhaustive_below else "brute"
