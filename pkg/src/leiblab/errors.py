"""Exception hierarchy shared by every leiblab module."""

from __future__ import annotations


class LeibError(Exception):
    """Base class for all leiblab errors."""


class Char2Field(LeibError, ValueError):
    def __init__(self, p: int = 2):
        super().__init__(f"characteristic {p} is not supported: 1/2 must exist in the field")
        self.p = p


class FieldMismatch(LeibError, ValueError):
    pass


class DimensionMismatch(LeibError, ValueError):
    pass


class IndexOutOfRange(LeibError, IndexError):
    pass


class LeibnizViolation(LeibError, ValueError):
    """The structure constants break [x,[y,z]] = [[x,y],z] - [[x,z],y].

    Indices are stored 0-based; the message reports them 1-based.
    """

    def __init__(self, i: int, j: int, k: int, lhs, rhs):
        self.i, self.j, self.k = i, j, k
        self.lhs, self.rhs = tuple(lhs), tuple(rhs)
        super().__init__(
            f"Leibniz identity fails at basis triple ({i + 1},{j + 1},{k + 1}): "
            f"lhs={_fmt(self.lhs)} rhs={_fmt(self.rhs)}"
        )


class NotAnIdeal(LeibError, ValueError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class NotInvariant(LeibError, ValueError):
    pass


class TargetNotAbelian(LeibError, ValueError):
    pass


class NotClosed(LeibError, ValueError):
    pass


class ShapeMismatch(LeibError, ValueError):
    pass


class SpecTooLarge(LeibError, ValueError):
    pass


class ParseError(LeibError, ValueError):
    def __init__(self, message: str, where: str | None = None):
        super().__init__(f"{where}: {message}" if where else message)
        self.where = where


class UnknownFixture(LeibError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown fixture"


def _fmt(vec) -> str:
    return "(" + ", ".join(str(v) for v in vec) + ")"
