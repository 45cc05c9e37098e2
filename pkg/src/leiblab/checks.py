"""Uniform pass/fail/skip records for executable theorem checks."""

from __future__ import annotations

from dataclasses import dataclass

PASS, FAIL, SKIP, INFO = "pass", "fail", "skip", "info"


@dataclass(frozen=True)
class Check:
    name: str
    status: str
    detail: str = ""
    certainty: str = "exact"

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def as_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail, "certainty": self.certainty}

    def line(self) -> str:
        tag = self.status.upper()
        cert = "" if self.certainty == "exact" else f" [{self.certainty}]"
        return f"{tag:5} {self.name}{cert}" + (f": {self.detail}" if self.detail else "")


def verdict(name: str, holds: bool, detail: str = "", certainty: str = "exact") -> Check:
    return Check(name, PASS if holds else FAIL, detail, certainty)


def skipped(name: str, why: str) -> Check:
    return Check(name, SKIP, why)


def all_ok(checks) -> bool:
    return all(c.ok for c in checks)
