"""Violation records and check reports.

Checkers never answer with a bare boolean: the value of this artifact is
diagnosis, so every failed identity is reported with its condition label,
the basis tuple it failed on, and both sides of the equation.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Violation:
    condition: str
    where: tuple[int, ...]
    lhs: tuple
    rhs: tuple


@dataclass
class CheckReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def by_condition(self) -> dict[str, list[Violation]]:
        out: dict[str, list[Violation]] = {}
        for v in self.violations:
            out.setdefault(v.condition, []).append(v)
        return out

    def conditions(self) -> tuple[str, ...]:
        return tuple(sorted({v.condition for v in self.violations}))

    def sorted(self) -> "CheckReport":
        return CheckReport(sorted(self.violations, key=lambda v: (v.condition, v.where)))

    def require(self, what: str) -> None:
        if self.violations:
            head = self.violations[0]
            raise PreconditionError(
                f"{what}: {len(self.violations)} violation(s), first is "
                f"{head.condition} at {head.where}: {head.lhs} != {head.rhs}",
                self,
            )


class PreconditionError(ValueError):
    """A domain precondition failed on otherwise well-formed input."""

    def __init__(self, message: str, report: "CheckReport | None" = None):
        super().__init__(message)
        self.report = report


def report_from(residuals) -> CheckReport:
    """Collect the non-identities from an iterator of (condition, tuple, lhs, rhs)."""
    report = CheckReport()
    for condition, where, lhs, rhs in residuals:
        if lhs != rhs:
            report.violations.append(Violation(condition, where, lhs, rhs))
    return report.sorted()
