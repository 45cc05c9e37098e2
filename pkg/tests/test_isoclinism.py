import random

import pytest

from leiblab import GF, QQ, ShapeMismatch, abelian, direct_sum, fixture
from leiblab.checks import FAIL, SKIP
from leiblab.isoclinism import (
    IsoclinismWitness,
    commutator_map,
    identity_witness,
    isoclinism_invariants,
    padding_witness,
    stem_dim_audit,
    verify_isoclinism,
)
from leiblab.lattice import lie_center

from conftest import vec


def test_commutator_map_lie_zero():
    C = commutator_map(fixture("LEF"))
    assert C.gamma_dim == 0


def test_commutator_map_l2f():
    A = fixture("L2f")
    C = commutator_map(A)
    assert C.quotient_dim == 1
    assert C.vectors[0][0] == vec(A, (1, 2))
    assert C.well_defined


def test_commutator_map_l2c():
    A = fixture("L2c")
    C = commutator_map(A)
    assert C.quotient_dim == 2
    assert C.vectors[0][0] == C.vectors[1][1] == vec(A, (1, 2))
    assert C.vectors[0][1] == A.zero_vector()


def test_commutator_representative_independent(fixtures_q):
    rng = random.Random(11)
    for A in fixtures_q.values():
        C = commutator_map(A)
        z = lie_center(A)
        q = z.complement_indices()
        for i, a in enumerate(q):
            for j, b in enumerate(q):
                u = z.combination([A.field.coerce(rng.randint(-5, 5)) for _ in z.basis]) if z.basis else A.zero_vector()
                x = tuple(s + t for s, t in zip(A.e(a), u))
                assert A.lie_bracket(x, A.e(b)) == C.vectors[i][j]


def test_identity_and_padding(fixtures_q):
    for A in fixtures_q.values():
        assert verify_isoclinism(A, A, identity_witness(A))
        for k in (1, 2, 3):
            B, w = padding_witness(A, k)
            assert verify_isoclinism(A, B, w)


def test_l2c_vs_l2f_rejected():
    A, B = fixture("L2c"), fixture("L2f")
    w = IsoclinismWitness(((1, 0),), ((1,),))
    assert verify_isoclinism(A, B, w) is False


def test_shape_mismatch():
    A = fixture("L2c")
    with pytest.raises(ShapeMismatch):
        verify_isoclinism(A, A, IsoclinismWitness(((1, 0, 0),), ((1,),)))


def test_singular_witness_rejected():
    A = fixture("L2c")
    assert not verify_isoclinism(A, A, IsoclinismWitness(((1, 0), (0, 0)), ((1,),)))


def test_bad_square_rejected():
    A = fixture("L2c")
    # eta swaps the two quotient generators, xi = -1 breaks the square
    assert not verify_isoclinism(A, A, IsoclinismWitness(((0, 1), (1, 0)), ((-1,),)))
    assert verify_isoclinism(A, A, IsoclinismWitness(((0, 1), (1, 0)), ((1,),)))


def test_invariants_padding():
    A = fixture("L2c")
    B = direct_sum(A, abelian(2, QQ))
    a, b = isoclinism_invariants(A), isoclinism_invariants(B)
    assert a["class"] == 2
    assert {k: v for k, v in a.items() if k != "der_c_certainty"} == {
        k: v for k, v in b.items() if k != "der_c_certainty"
    }
    assert a["id_star_dim"] == b["id_star_dim"]


def _status(A, prefix):
    return next(c for c in stem_dim_audit(A) if c.name.startswith(prefix)).status


def test_stem_audit_items():
    assert _status(fixture("L2c"), "(iii)") == "pass"
    assert _status(fixture("L2a"), "(iv)") == "pass"
    assert _status(fixture("L3s"), "(vii)") == "pass"
    assert _status(fixture("R2"), "(vii)") == SKIP


def test_stem_audit_no_failures(fixtures_q):
    for A in fixtures_q.values():
        assert all(c.status != FAIL for c in stem_dim_audit(A))
