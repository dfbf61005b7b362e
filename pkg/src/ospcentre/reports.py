"""Pass/fail reports shared by the verification campaigns and the CLI."""
from __future__ import annotations

import time
from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"


@dataclass
class Check:
    name: str
    status: str
    witness: str | None = None

    def to_json(self):
        out = {"name": self.name, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class VerificationReport:
    campaign: str
    params: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)
    timing_ms: int | None = None
    sort_checks: bool = True
    _start: float = field(default_factory=time.perf_counter, repr=False)

    def add(self, name: str, ok: bool, witness=None) -> bool:
        self.checks.append(Check(name, PASS if ok else FAIL, None if ok else _as_witness(witness)))
        return ok

    def skip(self, name: str, reason: str = "singular parameters"):
        self.checks.append(Check(name, SKIPPED, f"skipped: {reason}"))

    def extend(self, other: "VerificationReport", prefix: str = ""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.status, c.witness))

    def finish(self) -> "VerificationReport":
        self.timing_ms = int((time.perf_counter() - self._start) * 1000)
        if self.sort_checks:
            self.checks.sort(key=lambda c: c.name)
        return self

    @property
    def passed(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    @property
    def failures(self):
        return [c for c in self.checks if c.status == FAIL]

    def count(self, status: str) -> int:
        return sum(1 for c in self.checks if c.status == status)

    def to_json(self, timing: bool = True):
        out = {
            "campaign": self.campaign,
            "params": self.params,
            "checks": [c.to_json() for c in self.checks],
        }
        if timing:
            out["timing_ms"] = self.timing_ms
        return out

    def to_text(self) -> str:
        params = ", ".join(f"{k}={v}" for k, v in self.params.items())
        lines = [f"{self.campaign} ({params})"]
        for c in self.checks:
            line = f"  [{c.status}] {c.name}"
            if c.witness:
                line += f": {c.witness}"
            lines.append(line)
        lines.append(
            f"  {self.count(PASS)} passed, {self.count(FAIL)} failed, {self.count(SKIPPED)} skipped"
        )
        return "\n".join(lines)


def _as_witness(w):
    if w is None:
        return None
    s = str(w)
    return s if len(s) <= 400 else s[:397] + "..."
