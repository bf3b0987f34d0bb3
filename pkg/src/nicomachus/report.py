"""Verification report records shared by every command."""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field
from typing import Any, Literal

Status = Literal["pass", "fail", "info"]


@dataclass(frozen=True)
class Check:
    name: str
    status: Status
    expected: str = ""
    actual: str = ""
    provenance: str = ""
    payload: dict[str, Any] | None = None

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        if d["payload"] is None:
            del d["payload"]
        return d


def check_equal(name: str, expected, actual, provenance: str = "") -> Check:
    ok = expected == actual
    return Check(name, "pass" if ok else "fail", str(expected), str(actual), provenance)


def check_true(name: str, ok: bool, expected: str = "true", actual: str | None = None,
               provenance: str = "") -> Check:
    return Check(name, "pass" if ok else "fail", expected,
                 actual if actual is not None else str(bool(ok)).lower(), provenance)


@dataclass
class Report:
    command: str
    params: dict[str, str] = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)
    elapsed_millis: int = 0

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def extend(self, checks) -> None:
        self.checks.extend(checks)

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def sorted_checks(self) -> list[Check]:
        return sorted(self.checks, key=lambda c: c.name)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.status == "fail"]

    def get(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self, include_timing: bool = True) -> dict[str, Any]:
        d: dict[str, Any] = {
            "command": self.command,
            "params": {k: str(v) for k, v in sorted(self.params.items())},
            "checks": [c.to_dict() for c in self.sorted_checks()],
            "ok": self.ok,
        }
        if include_timing:
            d["elapsedMillis"] = self.elapsed_millis
        return d

    def to_json(self, include_timing: bool = True) -> str:
        return json.dumps(self.to_dict(include_timing), indent=2, sort_keys=False)

    def to_text(self) -> str:
        lines = [f"{self.command}  " + " ".join(f"{k}={v}" for k, v in sorted(self.params.items()))]
        width = max((len(c.name) for c in self.checks), default=0)
        for c in self.sorted_checks():
            lines.append(f"  [{c.status:4}] {c.name:<{width}}  expected={c.expected}  actual={c.actual}")
        lines.append(f"  {'OK' if self.ok else 'FAILED'} ({self.elapsed_millis} ms)")
        return "\n".join(lines)


class timed:
    """Context manager stamping ``elapsed_millis`` onto a report."""

    def __init__(self, report: Report):
        self.report = report

    def __enter__(self):
        self._t0 = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.elapsed_millis = int((time.perf_counter() - self._t0) * 1000)
        return False
