"""Named example algebras and the JSON algebra file format.

File layout (indices are 1-based, coefficients are strings)::

    {"dim": 3, "field": "rational", "basis": ["a1", "a2", "a3"],
     "brackets": [[2, 2, [[1, "1"]]], [3, 3, [[1, "1"]]]]}
"""

from __future__ import annotations

import json
import os
import re
from fractions import Fraction
from pathlib import Path

from .algebra import Algebra, build_algebra
from .errors import ParseError, UnknownFixture
from .fields import QQ, Field

FIXTURE_NAMES = ("LEF", "L2c", "L2a", "L2f", "R21", "R2", "L3s")


def _lef(F, _g):
    return build_algebra(2, F, {(0, 1): {0: 1}, (1, 0): {0: -1}}, ("e", "f"))


def _l2c(F, _g):
    return build_algebra(3, F, {(1, 1): {0: 1}, (2, 2): {0: 1}})


def _l2a(F, g):
    return build_algebra(3, F, {(1, 1): {0: g}, (2, 1): {0: 1}, (2, 2): {0: 1}})


def _l2f(F, _g):
    return build_algebra(3, F, {(1, 2): {1: 1}, (2, 1): {1: -1}, (2, 2): {0: 1}})


def _r21(F, _g):
    return build_algebra(4, F, {(0, 1): {3: 1}, (1, 0): {3: -1}, (2, 2): {3: 1}})


def _r2(F, _g):
    return build_algebra(4, F, {(0, 3): {0: 1}, (1, 3): {1: 1}})


def _l3s(F, _g):
    return build_algebra(3, F, {(2, 2): {0: 1}})


_BUILDERS = {
    "LEF": _lef, "L2c": _l2c, "L2a": _l2a, "L2f": _l2f,
    "R21": _r21, "R2": _r2, "L3s": _l3s,
}


def fixture(name: str, field: Field = QQ, gamma=None) -> Algebra:
    """A catalog algebra. ``L2a`` takes ``gamma`` (default 1), also as ``"L2a:GAMMA"``."""
    base, _, arg = name.partition(":")
    m = re.fullmatch(r"(\w+)\((.*)\)", base)
    if m:
        base, arg = m.group(1), m.group(2)
    if base not in _BUILDERS:
        raise UnknownFixture(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_NAMES)}")
    if arg:
        if base != "L2a":
            raise UnknownFixture(f"fixture {base} takes no parameter")
        gamma = arg
    if gamma is None:
        gamma = 1
    return _BUILDERS[base](field, field.coerce(gamma))


def all_fixtures(field: Field = QQ) -> dict[str, Algebra]:
    return {name: fixture(name, field) for name in FIXTURE_NAMES}


# -- file format -------------------------------------------------------------

def _coeff_text(v) -> str:
    return str(Fraction(v)) if isinstance(v, Fraction) else str(int(v))


def to_document(A: Algebra) -> dict:
    brackets = []
    for i in range(A.n):
        for j in range(A.n):
            terms = [[k + 1, _coeff_text(v)] for k, v in enumerate(A.c[i][j]) if v]
            if terms:
                brackets.append([i + 1, j + 1, terms])
    return {"dim": A.n, "field": A.field.name, "basis": list(A.labels), "brackets": brackets}


def serialize(A: Algebra) -> str:
    return json.dumps(to_document(A), indent=2, ensure_ascii=False) + "\n"


def _index(value, n, where):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"index must be an integer, got {value!r}", where)
    if not 1 <= value <= n:
        raise ParseError(f"index {value} outside 1..{n}", where)
    return value - 1


def _coefficient(value, F, where):
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise ParseError(f"coefficient must be a string, got {value!r}", where)
    text = str(value).strip()
    if not re.fullmatch(r"[+-]?\d+(/\d+)?", text):
        raise ParseError(f"bad coefficient {value!r}", where)
    try:
        return F.coerce(Fraction(text))
    except ZeroDivisionError as exc:
        raise ParseError(str(exc), where) from exc


def from_document(doc) -> Algebra:
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    for key in ("dim", "field", "brackets"):
        if key not in doc:
            raise ParseError("missing key", key)
    n = doc["dim"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ParseError(f"dim must be a positive integer, got {n!r}", "dim")
    if not isinstance(doc["field"], str):
        raise ParseError("field must be a string", "field")
    try:
        F = Field.parse(doc["field"])
    except ValueError as exc:
        if isinstance(exc, ParseError) or type(exc) is not ValueError:
            raise
        raise ParseError(str(exc), "field") from exc
    labels = doc.get("basis")
    if labels is not None:
        if not isinstance(labels, list) or len(labels) != n or not all(isinstance(s, str) for s in labels):
            raise ParseError(f"basis must list {n} names", "basis")
        if len(set(labels)) != n:
            raise ParseError("basis names must be distinct", "basis")
    if not isinstance(doc["brackets"], list):
        raise ParseError("brackets must be a list", "brackets")
    sparse: dict = {}
    for pos, entry in enumerate(doc["brackets"]):
        where = f"brackets[{pos}]"
        if not isinstance(entry, list) or len(entry) != 3 or not isinstance(entry[2], list):
            raise ParseError("expected [i, j, [[k, coeff], ...]]", where)
        i, j = _index(entry[0], n, where), _index(entry[1], n, where)
        if (i, j) in sparse:
            raise ParseError(f"pair ({i + 1},{j + 1}) listed twice", where)
        terms = {}
        for t, term in enumerate(entry[2]):
            w = f"{where}[2][{t}]"
            if not isinstance(term, list) or len(term) != 2:
                raise ParseError("expected [k, coeff]", w)
            k = _index(term[0], n, w)
            if k in terms:
                raise ParseError(f"target {k + 1} listed twice", w)
            terms[k] = _coefficient(term[1], F, w)
        sparse[(i, j)] = terms
    return build_algebra(n, F, sparse, labels)


def parse_algebra(source) -> Algebra:
    """Read an algebra from a path or from JSON text."""
    if isinstance(source, Path) or (isinstance(source, str) and not source.lstrip().startswith("{")):
        path = os.fspath(source)
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            raise ParseError(f"cannot read file: {exc.strerror}", path) from exc
    else:
        text = source
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"line {exc.lineno}") from exc
    return from_document(doc)
