import json

from leiblab import QQ, abelian, fixture
from leiblab.report import SCHEMA, build_report, to_json, to_text


def test_example_values():
    r = build_report(fixture("L2f"), audit=False)
    assert r["id_star_dim"] == 1 and r["p"] == 1 and r["gamma2_dim"] == 1
    r = build_report(fixture("R2"), audit=False)
    assert r["id_star_dim"] == 4 and r["p_gamma2_bound"] == 6


def test_abelian():
    r = build_report(abelian(3, QQ), audit=False)
    assert r["der_lie_dim"] == r["der_abs_dim"] == r["der_z_dim"] == 9
    assert r["gamma2_dim"] == 0


def test_schema_and_audit():
    r = build_report(fixture("L2c"))
    assert r["schema"] == SCHEMA == 1
    assert r["z_lie_dim"] == 1 and r["audit_ok"]
    assert all(set(c) == {"name", "status", "detail", "certainty"} for c in r["audit"])


def test_json_stable():
    A = fixture("R2")
    a = to_json(build_report(A, seed=7))
    b = to_json(build_report(A, seed=7))
    assert a == b
    assert json.loads(a)["seed"] == 7


def test_text():
    out = to_text(build_report(fixture("L3s")))
    assert "Lie-filiform" in out and "audit:" in out
