"""Executable audits: every structural claim about an algebra becomes a Check."""

from __future__ import annotations

import random

from .algebra import Algebra, quotient_algebra
from .checks import INFO, Check, skipped, verdict
from .errors import NotInvariant, TargetNotAbelian
from .inner import der_c, almost_inner_suite, der_c_additivity, right_mul, standard_ideals
from .isoclinism import identity_witness, isoclinism_invariants, padding_witness, stem_dim_audit, verify_isoclinism
from .lattice import classical_centers, gamma2, is_ideal, lie_center, lie_centralizer
from .linmap import LinearMap, map_commutator
from .maps import (
    MapSpace,
    centroid_decomposition,
    centroid_lie,
    der_abs,
    der_lie,
    der_z,
    hom_space,
    id_lie,
    id_star,
    k_intersection,
    t_of_ideal,
    v_of_ideal,
)
from .series import is_lie_filiform, is_lie_stem, is_lie_perfect_ideal, lie_nilpotency_class, lower_lie_series
from .subspace import image


def _combos(S: MapSpace, rng: random.Random, count: int) -> list[LinearMap]:
    """Basis elements plus a few seeded random combinations."""
    out = list(S.basis)
    F = S.ambient.field
    for _ in range(count if S.dim > 1 else 0):
        d = LinearMap.zero(S.n, F)
        for b in S.basis:
            d = d + b.scale(F.coerce(rng.randint(-3, 3)))
        out.append(d)
    return out


def _centroid_checks(A: Algebra, D: MapSpace, G: MapSpace, DZ: MapSpace, seed: int) -> list[Check]:
    out = []
    out.append(verdict("der_z = der_lie ∩ centroid", DZ == D.intersect(G), f"dims {DZ.dim} / {D.intersect(G).dim}"))
    out.append(verdict("centroid closed under composition",
                       all((a @ b) in G for a in G.basis for b in G.basis)))
    zl = lie_center(A)
    out.append(verdict("Z_Lie invariant under centroid", all(phi(z) in zl for phi in G.basis for z in zl.basis)))

    rng = random.Random(seed)
    ds, phis = _combos(D, rng, 2), _combos(G, rng, 2)
    ok_a = ok_b = ok_c = True
    for d in ds:
        for phi in phis:
            br = map_commutator(d, phi)
            ok_a = ok_a and br in G
            ok_b = ok_b and (((d @ phi) in G) == ((phi @ d) in DZ))
            ok_c = ok_c and (((d @ phi) in D) == (br in DZ))
    pairs = f"{len(ds) * len(phis)} pairs"
    out.append(verdict("der_lie normalizes the centroid", ok_a, pairs))
    out.append(verdict("d∘phi in centroid iff phi∘d in der_z", ok_b, pairs))
    out.append(verdict("d∘phi in der_lie iff [d,phi] in der_z", ok_c, pairs))

    bad = []
    for name, m in standard_ideals(A):
        if m.is_zero or not is_lie_perfect_ideal(A, m):
            continue
        if not all(phi(u) in m for phi in G.basis for u in m.basis):
            bad.append(name)
    out.append(verdict("Lie-perfect ideals are centroid-invariant", not bad, ", ".join(bad)))
    return out


def _vt_checks(A: Algebra, DZ: MapSpace) -> list[Check]:
    g2 = gamma2(A)
    name = "der_z = V(gamma_2) = T(gamma_2)"
    try:
        V = v_of_ideal(A, g2)
    except NotInvariant as exc:
        return [verdict(name, False, f"gamma_2 not centroid-invariant: {exc}")]
    T = t_of_ideal(A, g2)
    ok = V == DZ and T.dim == DZ.dim and T.lifted == DZ
    return [verdict(name, ok, f"dims {DZ.dim}/{V.dim}/{T.dim}")]


def _chain_checks(A: Algebra, spaces: dict, dc) -> list[Check]:
    D, Dabs, DZ, IL, IS = (spaces[k] for k in ("der_lie", "der_abs", "der_z", "id_lie", "id_star"))
    out = []
    out.append(verdict("der_abs ⊆ der_lie", Dabs <= D))
    out.append(verdict("R_x ∈ der_abs for all x", all(right_mul(A, e) in Dabs for e in A.basis())))
    out.append(verdict("id_star ⊆ id_lie ⊆ der_lie", IS <= IL and IL <= D))
    out.append(verdict("der_z ⊆ der_lie", DZ <= D))
    out.append(verdict("der_c ⊆ id_star ⊆ id_lie", dc.space <= IS and IS <= IL,
                       f"{dc.space.dim} ≤ {IS.dim} ≤ {IL.dim}", dc.certainty))
    open_ = [k for k in ("der_lie", "der_abs", "der_z", "centroid", "id_lie", "id_star")
             if not spaces[k].closed_under_commutator]
    out.append(verdict("map spaces closed under commutator", not open_, ", ".join(open_)))
    # not claimed anywhere for der_c; reported only
    closed = dc.space.closed_under_commutator
    out.append(Check("der_c closed under commutator", INFO, "yes" if closed else "no", dc.certainty))
    return out


def _structure_checks(A: Algebra) -> list[Check]:
    zl = lie_center(A)
    cc = classical_centers(A)
    out = [
        verdict("C(g, 0) = Z_Lie", lie_centralizer(A, A.full, A.zero) == zl),
        verdict("Z_Lie is a two-sided ideal", is_ideal(A, zl)),
        verdict("Z^r is a two-sided ideal", is_ideal(A, cc.Z_right)),
    ]
    rep = lie_nilpotency_class(A)
    out.append(verdict("lower and upper series give the same class", rep.consistent,
                       f"{rep.class_c} vs {rep.upper_class}"))
    lower = lower_lie_series(A)
    if is_lie_filiform(A, lower):
        out.append(verdict("filiform has class n-1", rep.class_c == A.n - 1, f"class {rep.class_c}"))
    # quotient maps carry the lower series onto the quotient's lower series
    bad = []
    for name, m in (("Z_Lie", zl), ("gamma_2", gamma2(A))):
        Q, proj = quotient_algebra(A, m)
        qs = lower_lie_series(Q)
        for i, term in enumerate(lower.terms):
            want = qs[min(i, len(qs) - 1)]
            if image(proj, term, Q.n) != want:
                bad.append(f"{name}:gamma_{i + 1}")
                break
    out.append(verdict("projections preserve the lower series", not bad, ", ".join(bad)))
    return out


def _dt_check(A: Algebra, DZ: MapSpace) -> Check:
    want = hom_space((A.n - gamma2(A).dim, lie_center(A).dim))
    return verdict("dim der_z = dim Hom(g/gamma_2, Z_Lie)", DZ.dim == want, f"{DZ.dim} vs {want}")


def k_lemma_check(A: Algebra) -> Check:
    """``K = gamma_2`` for class-2 algebras with abelian ``gamma_2``; reported, never failed."""
    name = "K = gamma_2 (class 2, abelian gamma_2)"
    lower = lower_lie_series(A)
    if not (lower.last.is_zero and len(lower.terms) == 3):
        return skipped(name, "not Lie-nilpotent of class 2")
    try:
        K = k_intersection(A)
    except TargetNotAbelian:
        return skipped(name, "gamma_2 not abelian")
    g2 = gamma2(A)
    if K == g2:
        return verdict(name, True, f"dim {K.dim}")
    return Check(name, INFO, f"discrepancy: dim K = {K.dim}, dim gamma_2 = {g2.dim}")


def map_spaces(A: Algebra) -> dict[str, MapSpace]:
    return {
        "der_lie": der_lie(A),
        "der_abs": der_abs(A),
        "der_z": der_z(A),
        "centroid": centroid_lie(A),
        "id_lie": id_lie(A),
        "id_star": id_star(A),
    }


def audit_algebra(A: Algebra, sample_budget: int = 64, seed: int = 0, spaces: dict | None = None,
                  dc=None) -> list[Check]:
    """All single-algebra checks."""
    spaces = spaces or map_spaces(A)
    dc = dc or der_c(A, sample_budget, seed)
    DZ = spaces["der_z"]
    out = _structure_checks(A)
    out += _chain_checks(A, spaces, dc)
    out += _centroid_checks(A, spaces["der_lie"], spaces["centroid"], DZ, seed)
    out += _vt_checks(A, DZ)
    out.append(_dt_check(A, DZ))
    out.append(k_lemma_check(A))
    out += stem_dim_audit(A)
    out += almost_inner_suite(A, sample_budget, seed)
    return out


def audit_pair(A: Algebra, B: Algebra, sample_budget: int = 64, seed: int = 0) -> list[Check]:
    """Checks on ``A + B``: centroid decomposition and additivity of der_c."""
    cd = centroid_decomposition(A, B)
    d = cd.dims
    out = [verdict("centroid of a direct sum decomposes", cd.verified and cd.subspace_equal,
                   f"{cd.total} = {d[0]} + {d[1]} + {d[2]} + {d[3]}")]
    out.append(der_c_additivity(A, B, sample_budget, seed))
    return out


def audit_isoclinism(A: Algebra, ks=(1, 2, 3), sample_budget: int = 64, seed: int = 0) -> list[Check]:
    """Identity and abelian-padding witnesses verify, and the invariants agree."""
    out = [verdict("identity witness verifies", verify_isoclinism(A, A, identity_witness(A)))]
    base = isoclinism_invariants(A, sample_budget, seed)
    dz = der_z(A).dim
    stem = is_lie_stem(A)
    for k in ks:
        B, w = padding_witness(A, k)
        out.append(verdict(f"padding by abelian({k}) verifies", verify_isoclinism(A, B, w)))
        inv = isoclinism_invariants(B, sample_budget, seed)
        diff = sorted(key for key in base if key != "der_c_certainty" and base[key] != inv[key])
        out.append(verdict(f"invariants agree with A + abelian({k})", not diff, ", ".join(diff)))
        name = f"stem: der_z embeds into der_z(A + abelian({k}))"
        if stem:
            got = der_z(B).dim
            out.append(verdict(name, got >= dz, f"{dz} <= {got}"))
        else:
            out.append(skipped(name, "not Lie-stem"))
    return out


def audit_fixture_suite(fixtures: dict, sample_budget: int = 64, seed: int = 0) -> dict[str, list[Check]]:
    """Per-fixture audits plus pair and isoclinism audits, keyed by a label."""
    results = {}
    for name, A in fixtures.items():
        results[name] = audit_algebra(A, sample_budget, seed) + audit_isoclinism(A, sample_budget=sample_budget, seed=seed)
    names = list(fixtures)
    for i, a in enumerate(names):
        for b in names[i:]:
            results[f"{a}+{b}"] = audit_pair(fixtures[a], fixtures[b], sample_budget, seed)
    return results
