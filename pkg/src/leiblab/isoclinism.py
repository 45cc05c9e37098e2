"""Commutator maps of the canonical extension ``Z_Lie -> g -> g/Z_Lie`` and
verification of Lie-isoclinisms between given algebras."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Algebra, abelian, direct_sum, embed_left
from .checks import Check, skipped, verdict
from .errors import ShapeMismatch
from .inner import der_c, projective_points
from .lattice import classical_centers, derived_ideal, gamma2, lie_center
from .linalg import inverse, rank
from .maps import center_of, der_z, hom_space, id_star, is_abelian
from .series import is_lie_filiform, is_lie_stem, lower_lie_series
from .subspace import quotient_coords


@dataclass(frozen=True)
class CommutatorTable:
    """``values[i][j]`` = coordinates of ``[q_i, q_j]_lie`` in the gamma_2 basis."""

    quotient_dim: int
    gamma_dim: int
    values: tuple
    vectors: tuple
    well_defined: bool

    def rank(self, field) -> int:
        """Rank of the induced linear map ``Q (x) Q -> gamma_2``."""
        cols = [self.values[i][j] for i in range(self.quotient_dim) for j in range(self.quotient_dim)]
        return rank(cols, self.gamma_dim, field)


def commutator_map(A: Algebra) -> CommutatorTable:
    z = lie_center(A)
    g2 = gamma2(A)
    q = z.complement_indices()
    reps = [A.e(j) for j in q]
    vectors = tuple(tuple(A.lie_bracket(x, y) for y in reps) for x in reps)
    values = tuple(tuple(g2.coordinates(v) for v in row) for row in vectors)
    ok = all(_shift_invariant(A, x, y, vectors[i][j], z) for i, x in enumerate(reps) for j, y in enumerate(reps))
    return CommutatorTable(len(q), g2.dim, values, vectors, ok)


def _shift_invariant(A: Algebra, x, y, value, z) -> bool:
    """``[x + u, y]_lie`` and ``[x, y + u]_lie`` equal ``value`` for ``u`` in ``z``."""
    F = A.field
    for u in z.basis:
        xu = tuple(F.reduce(a + b) for a, b in zip(x, u))
        yu = tuple(F.reduce(a + b) for a, b in zip(y, u))
        if A.lie_bracket(xu, y) != value or A.lie_bracket(x, yu) != value:
            return False
    return True


@dataclass(frozen=True)
class IsoclinismWitness:
    """``eta``: g1/Z_Lie -> g2/Z_Lie and ``xi``: gamma_2(g1) -> gamma_2(g2), as matrices."""

    eta: tuple
    xi: tuple


def _shape(M):
    return (len(M), len(M[0]) if M else 0)


def verify_isoclinism(A: Algebra, B: Algebra, w: IsoclinismWitness) -> bool:
    """True iff ``eta`` and ``xi`` are invertible and ``xi C_A = C_B (eta x eta)``."""
    CA, CB = commutator_map(A), commutator_map(B)
    F = A.field
    eta_shape, xi_shape = _shape(w.eta), _shape(w.xi)
    if eta_shape[1] != CA.quotient_dim or (CB.quotient_dim and eta_shape[0] != CB.quotient_dim):
        raise ShapeMismatch(f"eta has shape {eta_shape}, expected ({CB.quotient_dim}, {CA.quotient_dim})")
    if xi_shape[1] != CA.gamma_dim or (CB.gamma_dim and xi_shape[0] != CB.gamma_dim):
        raise ShapeMismatch(f"xi has shape {xi_shape}, expected ({CB.gamma_dim}, {CA.gamma_dim})")
    if CA.quotient_dim != CB.quotient_dim or CA.gamma_dim != CB.gamma_dim:
        return False
    k, r = CA.quotient_dim, CA.gamma_dim
    if k and inverse(w.eta, F) is None:
        return False
    if r and inverse(w.xi, F) is None:
        return False
    eta, xi = w.eta, w.xi
    for i in range(k):
        for j in range(k):
            lhs = [F.reduce(sum(xi[a][b] * CA.values[i][j][b] for b in range(r))) for a in range(r)]
            rhs = [F.zero] * r
            for s in range(k):
                if eta[s][i]:
                    for t in range(k):
                        if eta[t][j]:
                            coef = eta[s][i] * eta[t][j]
                            rhs = [F.reduce(x + coef * v) for x, v in zip(rhs, CB.values[s][t])]
            if lhs != rhs:
                return False
    return True


def identity_witness(A: Algebra) -> IsoclinismWitness:
    C = commutator_map(A)
    F = A.field
    I = lambda m: tuple(tuple(F.one if a == b else F.zero for b in range(m)) for a in range(m))
    return IsoclinismWitness(I(C.quotient_dim), I(C.gamma_dim))


def padding_witness(A: Algebra, k: int) -> tuple[Algebra, IsoclinismWitness]:
    """``B = A + abelian(k)`` and the witness induced by the inclusion ``A -> B``."""
    B = direct_sum(A, abelian(k, A.field))
    inc = embed_left(A, abelian(k, A.field))
    za, zb = lie_center(A), lie_center(B)
    g2a, g2b = gamma2(A), gamma2(B)
    eta_cols = [quotient_coords(zb, inc(A.e(j))) for j in za.complement_indices()]
    xi_cols = [g2b.coordinates(inc(u)) for u in g2a.basis]
    eta = tuple(tuple(col[i] for col in eta_cols) for i in range(len(zb.complement_indices())))
    xi = tuple(tuple(col[i] for col in xi_cols) for i in range(g2b.dim))
    return B, IsoclinismWitness(eta, xi)


def _isotropic_lines(A: Algebra, C: CommutatorTable):
    """Number of lines ``x`` of ``g/Z_Lie`` with ``C(x, x) = 0`` (finite fields only)."""
    F = A.field
    if not F.is_finite or F.p ** C.quotient_dim > 10 ** 5:
        return None
    k, r = C.quotient_dim, C.gamma_dim
    count = 0
    Q = abelian(k, F) if k else None
    if Q is None:
        return 0
    for x in projective_points(Q):
        val = [F.zero] * r
        for i in range(k):
            for j in range(k):
                if x[i] and x[j]:
                    val = [F.reduce(v + x[i] * x[j] * c) for v, c in zip(val, C.values[i][j])]
        count += not any(val)
    return count


def isoclinism_invariants(A: Algebra, sample_budget: int = 64, seed: int = 0) -> dict:
    C = commutator_map(A)
    lower = lower_lie_series(A)
    dc = der_c(A, sample_budget, seed)
    F = A.field
    left_rank = rank(
        [[v for j in range(C.quotient_dim) for v in C.values[i][j]] for i in range(C.quotient_dim)],
        C.quotient_dim * C.gamma_dim,
        F,
    )
    return {
        "gamma2_dim": C.gamma_dim,
        "quotient_dim": C.quotient_dim,
        "class": len(lower.terms) - 1 if lower.last.is_zero else None,
        "rank_profile": (C.rank(F), left_rank, _isotropic_lines(A, C)),
        "id_star_dim": id_star(A).dim,
        "der_c_dim": dc.space.dim,
        "der_c_certainty": dc.certainty,
    }


def stem_dim_audit(A: Algebra) -> list[Check]:
    """Dimension identities and inequalities relating derivation spaces to
    ``gamma_2``, ``Z_Lie`` and the centers. Items whose hypotheses fail are skipped."""
    n = A.n
    g2, z = gamma2(A), lie_center(A)
    cc = classical_centers(A)
    dz = der_z(A)
    ids = id_star(A)
    lower = lower_lie_series(A)
    nilpotent = lower.last.is_zero
    cls = len(lower.terms) - 1 if nilpotent else None
    stem = is_lie_stem(A)
    p = n - z.dim
    derived_eq = derived_ideal(A) == g2
    out: list[Check] = []

    name = "(i) stem: dim der_z = dim T(g/gamma_2, Z_Lie)"
    if stem:
        want = hom_space((n - g2.dim, z.dim))
        out.append(verdict(name, dz.dim == want, f"{dz.dim} vs {want}"))
    else:
        out.append(skipped(name, "not Lie-stem"))

    two_step = cls == 2
    name = "(ii) class 2: dim Z(der_z) = dim T(g/Z_Lie, gamma_2)"
    if two_step:
        want = hom_space((p, g2.dim))
        got = center_of(dz).dim
        out.append(verdict(name, got == want, f"{got} vs {want}"))
    else:
        out.append(skipped(name, "not Lie-nilpotent of class 2"))

    name = "(iii) class 2: der_z abelian iff gamma_2 = Z_Lie"
    if two_step:
        ab, eq = is_abelian(dz), g2 == z
        out.append(verdict(name, ab == eq, f"abelian={ab}, equal={eq}"))
    else:
        out.append(skipped(name, "not Lie-nilpotent of class 2"))

    name = "(iv) id_star = der_z iff gamma_2 = Z_Lie"
    if derived_eq and z in cc.Z_right:
        same, eq = ids == dz, g2 == z
        out.append(verdict(name, same == eq, f"id_star=der_z: {same}, gamma_2=Z_Lie: {eq}"))
    else:
        out.append(skipped(name, "needs [g,g] = gamma_2 and Z_Lie in Z^r"))

    bound = p * g2.dim
    out.append(verdict("(v) dim id_star <= p dim gamma_2", ids.dim <= bound, f"{ids.dim} <= {p}*{g2.dim}"))

    name = "(vi) dim g/Z_Lie <= p dim gamma_2"
    hyp6 = cc.Z_right == z and derived_eq
    if hyp6:
        out.append(verdict(name, p <= bound, f"{p} <= {p}*{g2.dim}"))
    else:
        out.append(skipped(name, "needs Z^r = Z_Lie and [g,g] = gamma_2"))

    name = "(vii) filiform at the bound forces n = 3"
    if hyp6 and z in cc.Z_left and p == bound and p > 0 and is_lie_filiform(A, lower):
        out.append(verdict(name, n == 3, f"n={n}"))
    else:
        out.append(skipped(name, "hypotheses not met"))

    name = "stem iff der_z abelian (Lie-nilpotent, gamma_2 != 0)"
    if nilpotent and not g2.is_zero:
        ab = is_abelian(dz)
        out.append(verdict(name, ab == stem, f"abelian={ab}, stem={stem}"))
    else:
        out.append(skipped(name, "needs Lie-nilpotent with gamma_2 != 0"))
    return out
