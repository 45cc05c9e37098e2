"""Spaces of linear maps cut out by linear identities.

A map ``d`` is an n x n matrix ``M`` with ``d(e_j) = sum_i M[i][j] e_i``.
Its unknowns are flattened row-major, so ``M[i][j]`` is coordinate
``i*n + j`` of a vector in K^(n^2). Every identity below is instantiated on
basis vectors and becomes a sparse row over those n^2 coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .algebra import Algebra, direct_sum
from .errors import FieldMismatch, NotClosed, NotInvariant, TargetNotAbelian
from .lattice import derived_ideal, gamma2, lie_center, lie_centralizer
from .linalg import Echelon
from .linmap import LinearMap, map_commutator
from .subspace import Subspace, annihilator, span, subspace_intersect, subspace_sum


@dataclass(frozen=True, eq=False)
class MapSpace:
    """A subspace of End(g), stored as a canonical Subspace of K^(n^2)."""

    ambient: Algebra
    space: Subspace
    name: str = ""

    @property
    def n(self) -> int:
        return self.ambient.n

    @property
    def dim(self) -> int:
        return self.space.dim

    def __len__(self) -> int:
        return self.space.dim

    def __eq__(self, other) -> bool:
        return isinstance(other, MapSpace) and self.space == other.space

    def __hash__(self):
        return hash(self.space)

    @cached_property
    def basis(self) -> tuple[LinearMap, ...]:
        F = self.ambient.field
        return tuple(LinearMap.from_flat(self.n, row, F) for row in self.space.basis)

    def __contains__(self, d) -> bool:
        if isinstance(d, MapSpace):
            return d.space in self.space
        return d.flat() in self.space

    def __le__(self, other: "MapSpace") -> bool:
        return self.space in other.space

    @cached_property
    def closed_under_commutator(self) -> bool:
        b = self.basis
        return all(map_commutator(b[i], b[j]) in self for i in range(len(b)) for j in range(i + 1, len(b)))

    def intersect(self, other: "MapSpace", name: str = "") -> "MapSpace":
        return MapSpace(self.ambient, subspace_intersect(self.space, other.space), name)

    def __add__(self, other: "MapSpace") -> "MapSpace":
        return MapSpace(self.ambient, subspace_sum(self.space, other.space))

    def __repr__(self) -> str:
        return f"MapSpace({self.name or '?'}, dim={self.dim}, n={self.n})"


def maps_spanned(A: Algebra, maps: Iterable[LinearMap], name: str = "") -> MapSpace:
    return MapSpace(A, span(A.n * A.n, (d.flat() for d in maps), A.field), name)


def solve_map_space(A: Algebra, constraints: Iterable[dict], name: str = "") -> MapSpace:
    """All maps satisfying every constraint row (``sum_k row[k] * flat(d)[k] = 0``)."""
    e = Echelon(A.n * A.n, A.field)
    for row in constraints:
        e.add(row)
    return MapSpace(A, span(A.n * A.n, e.nullspace(), A.field), name)


# -- constraint families ----------------------------------------------------

def _acc(row: dict, k: int, v, F):
    if v:
        nv = F.reduce(row.get(k, 0) + v)
        if nv:
            row[k] = nv
        else:
            row.pop(k, None)


def derivation_rows(A: Algebra, t, pairs) -> list[dict]:
    """Rows of ``d(t(a,b)) = t(d a, b) + t(a, d b)`` for the bilinear form ``t``."""
    n, F = A.n, A.field
    rows = []
    for a, b in pairs:
        for i in range(n):
            row: dict = {}
            for k in range(n):
                _acc(row, i * n + k, t[a][b][k], F)
            for m in range(n):
                _acc(row, m * n + a, -t[m][b][i], F)
                _acc(row, m * n + b, -t[a][m][i], F)
            if row:
                rows.append(row)
    return rows


def centroid_rows(A: Algebra) -> list[dict]:
    """Rows of ``d([a,b]_lie) = [d a, b]_lie`` over all ordered basis pairs.

    Symmetry of the lie-bracket turns the (b, a) instance into
    ``d([a,b]_lie) = [a, d b]_lie``, so both equalities are covered.
    """
    n, F, s = A.n, A.field, A.sym
    rows = []
    for a in range(n):
        for b in range(n):
            for i in range(n):
                row: dict = {}
                for k in range(n):
                    _acc(row, i * n + k, s[a][b][k], F)
                for m in range(n):
                    _acc(row, m * n + a, -s[m][b][i], F)
                if row:
                    rows.append(row)
    return rows


def image_rows(A: Algebra, S: Subspace) -> list[dict]:
    """Rows of ``d(g) ⊆ S``."""
    n = A.n
    rows = []
    for w in annihilator(S).basis:
        for j in range(n):
            rows.append({i * n + j: w[i] for i in range(n) if w[i]})
    return rows


def kill_rows(A: Algebra, U: Subspace) -> list[dict]:
    """Rows of ``d(U) = 0``."""
    n = A.n
    return [{i * n + j: u[j] for j in range(n) if u[j]} for u in U.basis for i in range(n)]


def preserve_rows(A: Algebra, U: Subspace) -> list[dict]:
    """Rows of ``d(U) ⊆ U``."""
    n, F = A.n, A.field
    rows = []
    for u in U.basis:
        for w in annihilator(U).basis:
            row: dict = {}
            for i in range(n):
                if w[i]:
                    for j in range(n):
                        _acc(row, i * n + j, w[i] * u[j], F)
            rows.append(row)
    return rows


def _pairs_sym(n):
    return [(a, b) for a in range(n) for b in range(a, n)]


def _pairs_all(n):
    return [(a, b) for a in range(n) for b in range(n)]


# -- named spaces -----------------------------------------------------------

def der_lie(A: Algebra) -> MapSpace:
    """Lie-derivations: ``d([x,y]_lie) = [dx,y]_lie + [x,dy]_lie``."""
    return solve_map_space(A, derivation_rows(A, A.sym, _pairs_sym(A.n)), "der_lie")


def der_abs(A: Algebra) -> MapSpace:
    """Ordinary derivations: ``d([x,y]) = [dx,y] + [x,dy]``."""
    return solve_map_space(A, derivation_rows(A, A.c, _pairs_all(A.n)), "der_abs")


def der_z(A: Algebra) -> MapSpace:
    """Lie-central derivations: Lie-derivations with image in ``Z_Lie``."""
    rows = derivation_rows(A, A.sym, _pairs_sym(A.n)) + image_rows(A, lie_center(A))
    S = solve_map_space(A, rows, "der_z")
    g2 = gamma2(A)
    assert all(not any(d(u)) for d in S.basis for u in g2.basis), "Lie-central derivation moved gamma_2"
    return S


def centroid_lie(A: Algebra) -> MapSpace:
    return solve_map_space(A, centroid_rows(A), "centroid")


def id_lie(A: Algebra) -> MapSpace:
    rows = derivation_rows(A, A.sym, _pairs_sym(A.n)) + image_rows(A, gamma2(A))
    return solve_map_space(A, rows, "id_lie")


def id_star(A: Algebra) -> MapSpace:
    rows = derivation_rows(A, A.sym, _pairs_sym(A.n)) + image_rows(A, gamma2(A)) + kill_rows(A, lie_center(A))
    return solve_map_space(A, rows, "id_star")


def hom_maps(A: Algebra, source_kill: Subspace, target: Subspace, name: str = "") -> MapSpace:
    """Linear maps ``g -> target`` vanishing on ``source_kill``.

    This realises ``T(g/source_kill, target)`` inside End(g).
    """
    return solve_map_space(A, image_rows(A, target) + kill_rows(A, source_kill), name)


def hom_space(dims: tuple[int, int]) -> int:
    a, b = dims
    if a < 0 or b < 0:
        raise ValueError("dimensions must be non-negative")
    return a * b


def v_of_ideal(A: Algebra, m: Subspace) -> MapSpace:
    """``V(m) = {phi in centroid : phi(m) = 0}``; ``m`` must be centroid-invariant."""
    G = centroid_lie(A)
    for phi in G.basis:
        for u in m.basis:
            if phi(u) not in m:
                raise NotInvariant(f"a centroid element moves {u} out of the ideal")
    return solve_map_space(A, centroid_rows(A) + kill_rows(A, m), "V")


@dataclass(frozen=True)
class TSpace:
    """``T(m)``: maps ``f: g/m -> C_g^Lie(m, 0)`` with the centroid identities.

    ``coeffs`` holds a basis of solutions as ``dim C x dim(g/m)`` matrices;
    ``lifted`` is the same space realised in End(g) as ``x -> f(x + m)``.
    """

    quotient_dim: int
    target: Subspace
    coeffs: tuple
    lifted: MapSpace

    @property
    def dim(self) -> int:
        return len(self.coeffs)


def t_of_ideal(A: Algebra, m: Subspace) -> TSpace:
    n, F = A.n, A.field
    C = lie_centralizer(A, m, A.zero)
    q = m.complement_indices()
    k, r = len(q), C.dim
    reps = [A.e(j) for j in q]

    def qcoords(x):
        res = m.residue(x)
        return [res[j] for j in q]

    # unknown F[t][a] -> index t*k + a ; f(xbar_a) = sum_t F[t][a] C_t
    lie_c = [[A.lie_bracket(C.basis[t], reps[b]) for b in range(k)] for t in range(r)]
    rows = []
    for a in range(k):
        for b in range(k):
            lhs = qcoords(A.lie_bracket(reps[a], reps[b]))
            for i in range(n):
                row: dict = {}
                for a2 in range(k):
                    if lhs[a2]:
                        for t in range(r):
                            _acc(row, t * k + a2, lhs[a2] * C.basis[t][i], F)
                for t in range(r):
                    _acc(row, t * k + a, -lie_c[t][b][i], F)
                if row:
                    rows.append(row)
    e = Echelon(r * k, F)
    e.extend(rows)
    sols = e.nullspace()
    coeffs = tuple(tuple(tuple(v[t * k + a] for a in range(k)) for t in range(r)) for v in sols)

    lifted = []
    proj_cols = [qcoords(A.e(j)) for j in range(n)]
    for Fm in coeffs:
        cols = []
        for j in range(n):
            x = [F.zero] * n
            for a in range(k):
                if proj_cols[j][a]:
                    for t in range(r):
                        if Fm[t][a]:
                            x = [F.reduce(xi + proj_cols[j][a] * Fm[t][a] * ci) for xi, ci in zip(x, C.basis[t])]
            cols.append(x)
        lifted.append(LinearMap.from_columns(cols, F, n))
    return TSpace(k, C, coeffs, maps_spanned(A, lifted, "T"))


def k_intersection(A: Algebra) -> Subspace:
    """Intersection of kernels of all algebra homomorphisms ``g -> gamma_2^Lie(g)``.

    Homomorphisms into an abelian target are the linear maps killing ``[g,g]``.
    The target is always abelian (``gamma_2 = g^ann`` lies in ``Z^r``); the
    check below guards that reasoning rather than a reachable case.
    """
    g2 = gamma2(A)
    if any(any(A.bracket(u, v)) for u in g2.basis for v in g2.basis):
        raise TargetNotAbelian("gamma_2^Lie is not abelian as a subalgebra")
    H = hom_maps(A, derived_ideal(A), g2, "hom")
    n, F = A.n, A.field
    e = Echelon(n, F)
    for f in H.basis:
        e.extend(f.M)
    return A.span(e.nullspace())


def is_abelian(S: MapSpace) -> bool:
    if not S.closed_under_commutator:
        raise NotClosed(f"{S.name or 'map space'} is not closed under the commutator")
    b = S.basis
    return all(map_commutator(b[i], b[j]).is_zero for i in range(len(b)) for j in range(i + 1, len(b)))


def center_of(S: MapSpace) -> MapSpace:
    """``{z in S : [z, b] = 0 for all b in S}``."""
    if not S.closed_under_commutator:
        raise NotClosed(f"{S.name or 'map space'} is not closed under the commutator")
    A, b = S.ambient, S.basis
    m = len(b)
    flats = [[map_commutator(b[i], b[j]).flat() for i in range(m)] for j in range(m)]
    e = Echelon(m, A.field)
    for j in range(m):
        for pos in range(A.n * A.n):
            e.add([flats[j][i][pos] for i in range(m)])
    combos = []
    for t in e.nullspace():
        z = LinearMap.zero(A.n, A.field)
        for ti, bi in zip(t, b):
            if ti:
                z = z + bi.scale(ti)
        combos.append(z)
    return maps_spanned(A, combos, f"Z({S.name})")


def _block(A: Algebra, d: LinearMap, offset: int) -> LinearMap:
    """Place a square map on the summand starting at ``offset``."""
    F, n = A.field, A.n
    M = [[F.zero] * n for _ in range(n)]
    for i in range(d.rows):
        for j in range(d.cols):
            M[offset + i][offset + j] = d.M[i][j]
    return LinearMap(F, tuple(tuple(r) for r in M), n)


def _embed_subspace(S: Subspace, n: int, offset: int) -> Subspace:
    F = S.field
    z = F.zero
    rows = [(z,) * offset + tuple(r) + (z,) * (n - offset - S.ambient_dim) for r in S.basis]
    return span(n, rows, F)


@dataclass(frozen=True)
class CentroidDecomposition:
    dims: tuple[int, int, int, int]
    total: int
    verified: bool
    subspace_equal: bool


def centroid_decomposition(A1: Algebra, A2: Algebra) -> CentroidDecomposition:
    """Compare the centroid of ``A1 + A2`` with the four blocks of the decomposition."""
    if A1.field != A2.field:
        raise FieldMismatch(f"{A1.field.name} vs {A2.field.name}")
    G = direct_sum(A1, A2)
    n1, n2, N = A1.n, A2.n, G.n
    whole = centroid_lie(G)
    G1, G2 = centroid_lie(A1), centroid_lie(A2)

    def cross(src_off, Asrc, dst_off, Adst):
        # maps g_src -> Z_Lie(g_dst) killing gamma_2(g_src) and the other summand
        kill = subspace_sum(_embed_subspace(gamma2(Asrc), N, src_off), _embed_subspace(Adst.full, N, dst_off))
        target = _embed_subspace(lie_center(Adst), N, dst_off)
        return hom_maps(G, kill, target)

    C1 = cross(0, A1, n1, A2)
    C2 = cross(n1, A2, 0, A1)
    blocks = [_block(G, d, 0) for d in G1.basis] + [_block(G, d, n1) for d in G2.basis]
    combined = maps_spanned(G, blocks) + C1 + C2
    dims = (G1.dim, G2.dim, C1.dim, C2.dim)
    ok_dim = sum(dims) == whole.dim
    return CentroidDecomposition(dims, whole.dim, ok_dim, ok_dim and combined == whole)

