import pytest

from leiblab import QQ, GF, all_fixtures, fixture


@pytest.fixture(scope="session")
def fixtures_q():
    return all_fixtures(QQ)


@pytest.fixture(scope="session")
def L2c():
    return fixture("L2c")


def vec(A, *coeffs):
    """Vector from 1-based ``{index: coeff}`` pairs, e.g. ``vec(A, (1, 2))`` = 2*a1."""
    v = [A.field.zero] * A.n
    for i, c in coeffs:
        v[i - 1] = A.field.coerce(c)
    return tuple(v)


def unit(A, *idx):
    """Span basis of unit vectors (1-based)."""
    return A.span([A.e(i - 1) for i in idx])


# one summary line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE: dict = {}


def record(num, title, ok, detail=""):
    ACCEPTANCE[num] = (title, bool(ok), detail)
    return ok


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        title, ok, detail = ACCEPTANCE[num]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {num}. {title}" + (f" -- {detail}" if detail else ""))
