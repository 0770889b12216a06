"""Verification reports: one :class:`Check` per (axiom, level) pair."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DimensionError
from .exact_linalg import Matrix


@dataclass(frozen=True)
class Witness:
    """First differing entry between the two sides of an identity."""

    row: int
    col: int
    lhs: object
    rhs: object


@dataclass(frozen=True)
class Check:
    axiom: str
    level: int | None
    passed: bool
    witness: Witness | None = None
    detail: str = ""

    def describe(self) -> str:
        where = "" if self.level is None else f" level={self.level}"
        tag = "PASS" if self.passed else "FAIL"
        line = f"{tag} {self.axiom}{where}"
        if self.detail:
            line += f" ({self.detail})"
        if self.witness is not None:
            w = self.witness
            line += f" entry=({w.row},{w.col}) lhs={w.lhs} rhs={w.rhs}"
        return line

    def to_dict(self) -> dict:
        out = {"axiom": self.axiom, "level": self.level, "passed": self.passed}
        if self.detail:
            out["detail"] = self.detail
        if self.witness is not None:
            w = self.witness
            out["witness"] = {"row": w.row, "col": w.col, "lhs": str(w.lhs), "rhs": str(w.rhs)}
        return out


@dataclass
class Report:
    checks: list[Check] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __bool__(self) -> bool:
        return self.passed

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def first_failure(self) -> Check | None:
        return next((c for c in self.checks if not c.passed), None)

    def for_axiom(self, axiom: str) -> list[Check]:
        return [c for c in self.checks if c.axiom == axiom]

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def extend(self, other: Report) -> Report:
        self.checks.extend(other.checks)
        self.warnings.extend(other.warnings)
        return self

    def render(self) -> str:
        lines = [c.describe() for c in self.checks]
        lines += [f"WARN {w}" for w in self.warnings]
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
            "warnings": list(self.warnings),
        }


def first_difference(lhs: Matrix, rhs: Matrix) -> Witness | None:
    if lhs.shape != rhs.shape:
        raise DimensionError(f"sides have shapes {lhs.shape} and {rhs.shape}")
    for k, (a, b) in enumerate(zip(lhs.entries, rhs.entries)):
        if a != b:
            return Witness(k // lhs.cols, k % lhs.cols, a, b)
    return None


def compare(axiom: str, level: int | None, lhs: Matrix, rhs: Matrix, detail: str = "") -> Check:
    w = first_difference(lhs, rhs)
    return Check(axiom, level, w is None, w, detail)
