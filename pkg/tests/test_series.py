import pytest

from leiblab import QQ, NotAnIdeal, abelian, fixture, lie_nilpotency_class, lower_lie_series, upper_lie_series
from leiblab.algebra import quotient_algebra
from leiblab.lattice import gamma2, lie_center
from leiblab.series import is_lie_filiform, is_lie_perfect_ideal, is_lie_stem, min_generators

from conftest import unit


def test_lower_series_l2c(L2c):
    s = lower_lie_series(L2c)
    assert s.terms == (L2c.full, unit(L2c, 1), L2c.zero)
    assert s.direction == "descending"


def test_lower_series_lie():
    A = fixture("LEF")
    assert lower_lie_series(A).terms == (A.full, A.zero)


def test_lower_series_r2():
    A = fixture("R2")
    s = lower_lie_series(A)
    assert s.terms == (A.full, unit(A, 1, 2), unit(A, 1, 2))
    assert s.stabilized_at == 1


def test_lower_series_needs_ideal():
    A = fixture("LEF")
    with pytest.raises(NotAnIdeal):
        lower_lie_series(A, unit(A, 2))


def test_upper_series():
    L2c = fixture("L2c")
    assert upper_lie_series(L2c).terms == (L2c.zero, unit(L2c, 1), L2c.full)
    ab = abelian(3, QQ)
    assert upper_lie_series(ab).terms == (ab.zero, ab.full)
    R2 = fixture("R2")
    assert upper_lie_series(R2).last == unit(R2, 3)


def test_series_monotone(fixtures_q):
    for A in fixtures_q.values():
        lo, up = lower_lie_series(A), upper_lie_series(A)
        assert all(b in a for a, b in zip(lo.terms, lo.terms[1:]))
        assert all(a in b for a, b in zip(up.terms, up.terms[1:]))


def test_class_report():
    r = lie_nilpotency_class(fixture("L2c"))
    assert r.nilpotent and r.class_c == 2 and r.consistent
    r = lie_nilpotency_class(fixture("L3s"))
    assert r.nilpotent and r.class_c == 2 and r.filiform
    r = lie_nilpotency_class(fixture("R2"))
    assert not r.nilpotent and r.class_c is None and r.consistent


def test_class_matches_upper(fixtures_q):
    for A in fixtures_q.values():
        assert lie_nilpotency_class(A).consistent


def test_stem():
    assert is_lie_stem(fixture("L2c"))
    assert not is_lie_stem(fixture("LEF"))
    assert not is_lie_stem(fixture("L2f"))


def test_perfect():
    L2c = fixture("L2c")
    assert is_lie_perfect_ideal(L2c, L2c.zero)
    assert not is_lie_perfect_ideal(L2c, L2c.full)
    assert not is_lie_perfect_ideal(L2c, unit(L2c, 1))


def test_filiform():
    assert is_lie_filiform(fixture("L3s"))
    assert not is_lie_filiform(fixture("R2"))
    # n = 1 is excluded (the definition would be vacuous)
    assert not is_lie_filiform(abelian(1, QQ))


def test_filiform_class(fixtures_q):
    for A in fixtures_q.values():
        if is_lie_filiform(A):
            assert lie_nilpotency_class(A).class_c == A.n - 1


def test_min_generators_l2f():
    A = fixture("L2f")
    Q, _ = quotient_algebra(A, lie_center(A))
    assert min_generators(Q) == (1, "exact")
    assert lie_nilpotency_class(A).p_generators == 1


def test_min_generators_r2():
    A = fixture("R2")
    Q, _ = quotient_algebra(A, lie_center(A))
    # as a vector space g/Z_Lie needs 3 elements; as an algebra 2 suffice
    assert min_generators(Q, mode="span") == (3, "exact")
    p, method = min_generators(Q)
    assert p == 2 and method in ("exact", "brute")
    assert lie_nilpotency_class(A).p_generators == 3


def test_min_generators_abelian():
    for n in (1, 2, 3):
        assert min_generators(abelian(n, QQ)) == (n, "exact")


def test_series_under_quotient(fixtures_q):
    for A in fixtures_q.values():
        lo = lower_lie_series(A)
        for m in (lie_center(A), gamma2(A)):
            Q, proj = quotient_algebra(A, m)
            qs = lower_lie_series(Q)
            for i, term in enumerate(lo.terms):
                img = Q.span([proj(u) for u in term.basis])
                assert img == qs[min(i, len(qs) - 1)]
