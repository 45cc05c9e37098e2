"""Exact scalar fields: the rationals and prime fields GF(p), p odd.

Scalars are plain Python objects. Over the rationals they are
:class:`fractions.Fraction`; over GF(p) they are ints in ``range(p)``.
Arithmetic is done with the native operators and folded back into the
field with :meth:`Field.reduce`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import Char2Field, ParseError


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Field:
    """A scalar field. ``p == 0`` denotes the rationals."""

    p: int = 0

    def __post_init__(self):
        if self.p == 0:
            return
        if self.p == 2:
            raise Char2Field(2)
        if not _is_prime(self.p):
            raise ValueError(f"GF({self.p}) is not a prime field")

    @classmethod
    def parse(cls, text: str) -> "Field":
        t = text.strip().lower()
        if t in ("rational", "q", "qq", "rationals"):
            return cls(0)
        m = re.fullmatch(r"gf\((\d+)\)|gf(\d+)", t)
        if not m:
            raise ParseError(f"unknown field {text!r}", "field")
        return cls(int(m.group(1) or m.group(2)))

    @property
    def name(self) -> str:
        return "rational" if self.p == 0 else f"gf({self.p})"

    @property
    def is_finite(self) -> bool:
        return self.p != 0

    @property
    def zero(self):
        return 0 if self.p else Fraction(0)

    @property
    def one(self):
        return 1 if self.p else Fraction(1)

    def __str__(self) -> str:
        return self.name

    def reduce(self, v):
        return v % self.p if self.p else v

    def coerce(self, value):
        """Map an int, Fraction or ``"num/den"`` string into the field."""
        if isinstance(value, str):
            try:
                value = Fraction(value.strip())
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(f"bad coefficient {value!r}") from exc
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise TypeError(f"cannot coerce {value!r} into {self.name}")
        if not self.p:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"{value} has no image in {self.name}")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return value % self.p

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p) if self.p else 1 / a

    def fmt(self, a) -> str:
        return str(a)

    def elements(self):
        if not self.p:
            raise ValueError("the rationals are not enumerable here")
        return range(self.p)


QQ = Field(0)


def GF(p: int) -> Field:
    return Field(p)
