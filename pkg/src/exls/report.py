"""Structured outcome of a verification run."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Any

__all__ = ["Failure", "VerifyReport", "merge_reports", "EXIT_PASS", "EXIT_FAIL", "EXIT_USAGE",
           "EXIT_INCONCLUSIVE"]

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3


@dataclass
class Failure:
    inputs: str
    expected: str
    got: str

    def to_dict(self) -> dict:
        return {"inputs": self.inputs, "expected": self.expected, "got": self.got}


@dataclass
class VerifyReport:
    check: str
    params: dict[str, Any] = field(default_factory=dict)
    attempted: int = 0
    passed: int = 0
    failures: list[Failure] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    inconclusive: bool = False
    wall_time: float = 0.0
    _t0: float = field(default_factory=time.perf_counter, repr=False, compare=False)

    def record(self, inputs: str, ok: bool, expected: str = "", got: str = "") -> bool:
        self.attempted += 1
        if ok:
            self.passed += 1
        else:
            self.failures.append(Failure(inputs, expected, got))
        return ok

    def note(self, text: str):
        self.notes.append(text)

    def finish(self) -> "VerifyReport":
        self.wall_time = time.perf_counter() - self._t0
        return self

    @property
    def ok(self) -> bool:
        return not self.failures and not self.inconclusive

    @property
    def exit_code(self) -> int:
        if self.failures:
            return EXIT_FAIL
        return EXIT_INCONCLUSIVE if self.inconclusive else EXIT_PASS

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "params": self.params,
            "attempted": self.attempted,
            "passed": self.passed,
            "failures": [f.to_dict() for f in self.failures],
            "notes": self.notes,
            "inconclusive": self.inconclusive,
            "wall_time": round(self.wall_time, 3),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def summary(self) -> str:
        status = "PASS" if self.ok else ("INCONCLUSIVE" if not self.failures else "FAIL")
        return (f"{self.check}: {status} {self.passed}/{self.attempted} "
                f"({self.wall_time:.2f}s)")

    def human(self, max_failures: int = 20) -> str:
        lines = [self.summary()]
        if self.params:
            lines.append("  params: " + ", ".join(f"{k}={v}" for k, v in self.params.items()))
        for n in self.notes:
            lines.append(f"  note: {n}")
        for f in self.failures[:max_failures]:
            lines.append(f"  FAILED {f.inputs}")
            lines.append(f"    expected: {f.expected}")
            lines.append(f"    got:      {f.got}")
        if len(self.failures) > max_failures:
            lines.append(f"  ... {len(self.failures) - max_failures} more failures")
        return "\n".join(lines)


def merge_reports(check: str, reports: list[VerifyReport], params: dict | None = None) -> VerifyReport:
    """Concatenate sub-reports in the given order."""
    out = VerifyReport(check, params or {})
    for r in reports:
        out.attempted += r.attempted
        out.passed += r.passed
        out.failures += [Failure(f"[{r.check}] {f.inputs}", f.expected, f.got) for f in r.failures]
        out.notes += [f"[{r.check}] {n}" for n in r.notes]
        out.inconclusive |= r.inconclusive
    out.wall_time = sum(r.wall_time for r in reports)
    return out
