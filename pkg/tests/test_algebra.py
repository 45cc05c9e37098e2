from fractions import Fraction

import pytest

from leiblab import (
    GF,
    QQ,
    Char2Field,
    DimensionMismatch,
    FieldMismatch,
    IndexOutOfRange,
    LeibnizViolation,
    NotAnIdeal,
    abelian,
    ann_ideal,
    bracket,
    build_algebra,
    direct_sum,
    fixture,
    gamma2,
    lie_bracket,
    lie_center,
    liezation,
    quotient_algebra,
)
from leiblab.fields import Field

from conftest import unit, vec


class TestField:
    def test_char2_rejected(self):
        with pytest.raises(Char2Field):
            Field(2)

    def test_non_prime_rejected(self):
        with pytest.raises(ValueError):
            GF(9)

    def test_parse(self):
        assert Field.parse("rational") == QQ
        assert Field.parse("GF(7)") == GF(7)
        with pytest.raises(Char2Field):
            Field.parse("gf(2)")

    def test_coerce(self):
        assert QQ.coerce("3/4") == Fraction(3, 4)
        assert GF(5).coerce(Fraction(1, 2)) == 3
        assert GF(5).coerce(-1) == 4
        with pytest.raises(ZeroDivisionError):
            GF(3).coerce(Fraction(1, 3))


class TestBuild:
    def test_l2c_valid(self):
        A = build_algebra(3, QQ, {(1, 1): {0: 1}, (2, 2): {0: 1}})
        assert A.n == 3 and A.c[1][1] == (1, 0, 0)

    def test_abelian_valid(self):
        A = build_algebra(4, QQ, {})
        assert A.is_abelian

    def test_violation_witness(self):
        # [e1,e1]=e2, [e2,e1]=e1: the first failing triple in lexicographic order
        with pytest.raises(LeibnizViolation) as info:
            build_algebra(2, QQ, {(0, 0): {1: 1}, (1, 0): {0: 1}})
        err = info.value
        assert (err.i, err.j, err.k) == (0, 1, 0)
        assert err.lhs == (0, 1) and err.rhs == (0, 0)
        assert "(1,2,1)" in str(err)

    def test_violating_triples_by_hand(self):
        # independent expansion of [x,[y,z]] - [[x,y],z] + [[x,z],y] on basis triples
        c = {(0, 0): (0, 1), (1, 0): (1, 0)}
        br = lambda u, v: tuple(
            sum(u[i] * v[j] * c.get((i, j), (0, 0))[k] for i in range(2) for j in range(2)) for k in range(2)
        )
        e = [(1, 0), (0, 1)]
        bad = [
            (i, j, k)
            for i in range(2) for j in range(2) for k in range(2)
            if br(e[i], br(e[j], e[k]))
            != tuple(a - b for a, b in zip(br(br(e[i], e[j]), e[k]), br(br(e[i], e[k]), e[j])))
        ]
        assert (0, 0, 0) not in bad
        assert bad[0] == (0, 1, 0)

    def test_index_errors(self):
        with pytest.raises(IndexOutOfRange):
            build_algebra(2, QQ, {(0, 2): {0: 1}})
        with pytest.raises(IndexOutOfRange):
            build_algebra(2, QQ, {(0, 0): {5: 1}})
        A = fixture("L2c")
        with pytest.raises(IndexOutOfRange):
            A.e(3)

    def test_char2_algebra(self):
        with pytest.raises(Char2Field):
            build_algebra(1, Field(2), {})


class TestBracket:
    def test_lef(self):
        A = fixture("LEF")
        e, f = A.basis()
        assert bracket(A, e, f) == e
        assert bracket(A, f, e) == vec(A, (1, -1))
        assert lie_bracket(A, e, f) == A.zero_vector()

    def test_zero(self, L2c):
        assert bracket(L2c, L2c.zero_vector(), L2c.e(1)) == L2c.zero_vector()

    def test_r2(self):
        A = fixture("R2")
        assert bracket(A, A.e(0), A.e(3)) == A.e(0)

    def test_lie_bracket_values(self, L2c):
        assert lie_bracket(L2c, L2c.e(1), L2c.e(1)) == vec(L2c, (1, 2))
        A = fixture("L2f")
        assert lie_bracket(A, A.e(1), A.e(2)) == A.zero_vector()
        assert lie_bracket(A, A.e(2), A.e(2)) == vec(A, (1, 2))

    def test_dimension_mismatch(self, L2c):
        with pytest.raises(DimensionMismatch):
            bracket(L2c, (1, 0), (0, 1, 0))


class TestIdeals:
    def test_ann_lie_algebra(self):
        assert ann_ideal(fixture("LEF")).is_zero

    def test_ann_values(self, L2c):
        assert ann_ideal(L2c) == unit(L2c, 1)
        R2 = fixture("R2")
        assert ann_ideal(R2) == unit(R2, 1, 2)

    def test_liezation_l2c_abelian(self, L2c):
        Q, proj = liezation(L2c)
        assert Q.n == 2 and Q.is_abelian
        assert proj.shape == (2, 3)

    def test_liezation_r2(self):
        Q, _ = liezation(fixture("R2"))
        assert Q.n == 2 and Q.is_abelian and Q.labels == ("a3~", "a4~")

    def test_liezation_of_lie(self):
        A = fixture("LEF")
        Q, _ = liezation(A)
        assert Q.c == A.c

    def test_liezation_antisymmetric(self, fixtures_q):
        for A in fixtures_q.values():
            Q, _ = liezation(A)
            assert Q.is_lie

    def test_quotient_trivial(self, L2c):
        Q, proj = quotient_algebra(L2c, L2c.zero)
        assert Q.c == L2c.c

    def test_quotient_l2f(self):
        A = fixture("L2f")
        Q, _ = quotient_algebra(A, lie_center(A))
        assert Q.n == 1 and Q.labels == ("a3~",)

    def test_quotient_r2_a1(self):
        A = fixture("R2")
        Q, _ = quotient_algebra(A, unit(A, 1))
        assert Q.n == 3

    def test_quotient_not_ideal(self):
        A = fixture("LEF")
        with pytest.raises(NotAnIdeal) as info:
            quotient_algebra(A, unit(A, 2))
        assert info.value.witness is not None

    def test_projection_is_homomorphism(self, fixtures_q):
        for A in fixtures_q.values():
            for m in (lie_center(A), gamma2(A), ann_ideal(A)):
                Q, proj = quotient_algebra(A, m)
                for x in A.basis():
                    for y in A.basis():
                        assert proj(A.bracket(x, y)) == Q.bracket(proj(x), proj(y))


class TestDirectSum:
    def test_zero_summand(self, L2c):
        S = direct_sum(L2c, abelian(0, QQ))
        assert S.c == L2c.c

    def test_l2c_twice(self, L2c):
        assert gamma2(direct_sum(L2c, L2c)).dim == 2

    def test_lef_l3s(self):
        S = direct_sum(fixture("LEF"), fixture("L3s"))
        assert S.n == 5

    def test_field_mismatch(self, L2c):
        with pytest.raises(FieldMismatch):
            direct_sum(L2c, fixture("L2c", GF(3)))

    def test_blockwise_invariants(self, fixtures_q):
        names = list(fixtures_q)
        for a in names:
            for b in names:
                A, B = fixtures_q[a], fixtures_q[b]
                S = direct_sum(A, B)
                assert gamma2(S).dim == gamma2(A).dim + gamma2(B).dim
                assert lie_center(S).dim == lie_center(A).dim + lie_center(B).dim
