"""Structured verification reports with deterministic rendering."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

__all__ = ["Check", "merge_checks", "VerdictReport"]


@dataclass(frozen=True)
class Check:
    """One verified claim: sample count, failure count, optional witness."""

    id: str
    paper_ref: str
    samples: int
    failures: int
    witness: str | None = None

    @property
    def status(self) -> str:
        return "pass" if self.failures == 0 else "fail"

    def to_dict(self) -> dict:
        out = {
            "id": self.id,
            "paper_ref": self.paper_ref,
            "samples": self.samples,
            "failures": self.failures,
            "status": self.status,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def merge_checks(id: str, paper_ref: str, checks) -> Check:
    """Combine per-case checks into one aggregate line."""
    checks = list(checks)
    witness = next((c.witness for c in checks if c.witness), None)
    return Check(
        id,
        paper_ref,
        sum(c.samples for c in checks),
        sum(c.failures for c in checks),
        witness,
    )


@dataclass
class VerdictReport:
    """Record of one suite run; identical inputs render to identical bytes.

    No timestamps or environment data are recorded, and checks are sorted by
    id before rendering, so completion order never shows through.
    """

    suite: str
    seed: int
    tolerance: float
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.failures == 0 for c in self.checks)

    def sorted_checks(self) -> list[Check]:
        return sorted(self.checks, key=lambda c: c.id)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "tolerance": self.tolerance,
            "checks": [c.to_dict() for c in self.sorted_checks()],
            "status": "pass" if self.passed else "fail",
        }

    def render_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def render_text(self) -> str:
        lines = [
            f"suite: {self.suite}",
            f"seed: {self.seed}  tolerance: {self.tolerance!r}",
            "",
            f"{'check':<44} {'samples':>8} {'failures':>9}  status",
        ]
        for c in self.sorted_checks():
            lines.append(f"{c.id:<44} {c.samples:>8} {c.failures:>9}  {c.status}")
            if c.witness:
                lines.append(f"    witness: {c.witness}")
        lines.append("")
        lines.append(f"result: {'PASS' if self.passed else 'FAIL'} ({len(self.checks)} checks)")
        return "\n".join(lines) + "\n"
