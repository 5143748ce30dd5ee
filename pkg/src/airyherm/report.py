"""Verification report: named cases with a metric, a tolerance and a verdict."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping


def fmt_float(x: float) -> str:
    """17 significant digits, enough to round-trip a double."""
    x = float(x)
    if math.isnan(x):
        return "NaN"
    if math.isinf(x):
        return "Infinity" if x > 0 else "-Infinity"
    return format(x, ".17g")


def fmt_param(v) -> str:
    if isinstance(v, float):
        return fmt_float(v)
    return str(v)


@dataclass(frozen=True)
class Case:
    name: str
    params: Mapping[str, str]
    metric: float
    tol: float
    passed: bool

    @classmethod
    def check(cls, name: str, metric: float, tol: float, **params) -> Case:
        """Case passing when ``metric <= tol`` (NaN never passes)."""
        metric = float(metric)
        return cls(name, {k: fmt_param(v) for k, v in params.items()}, metric, float(tol),
                   bool(metric <= tol))

    def with_tol(self, tol: float) -> Case:
        return Case(self.name, self.params, self.metric, tol, bool(self.metric <= tol))


@dataclass
class VerificationReport:
    suite: str
    cases: list[Case] = field(default_factory=list)

    def extend(self, cases: Iterable[Case]) -> None:
        self.cases.extend(cases)

    @property
    def summary(self) -> dict[str, int]:
        passed = sum(c.passed for c in self.cases)
        return {"failed": len(self.cases) - passed, "passed": passed, "total": len(self.cases)}

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.cases)

    def sorted_cases(self) -> list[Case]:
        return sorted(self.cases, key=lambda c: c.name)

    def first_failure(self) -> Case | None:
        return next((c for c in self.sorted_cases() if not c.passed), None)

    def to_json(self) -> str:
        """Deterministic JSON: cases sorted by name, keys sorted, floats at 17 digits."""
        lines = ["{", f'  "cases": [']
        items = []
        for c in self.sorted_cases():
            params = ", ".join(f"{json.dumps(k)}: {json.dumps(c.params[k])}"
                               for k in sorted(c.params))
            items.append(
                "    {"
                f'"metric": {_num(c.metric)}, '
                f'"name": {json.dumps(c.name)}, '
                f'"params": {{{params}}}, '
                f'"pass": {"true" if c.passed else "false"}, '
                f'"tol": {_num(c.tol)}'
                "}")
        lines.append(",\n".join(items))
        lines.append("  ],")
        s = self.summary
        lines.append(f'  "suite": {json.dumps(self.suite)},')
        lines.append('  "summary": {' + ", ".join(f'"{k}": {s[k]}' for k in sorted(s)) + "}")
        lines.append("}")
        return "\n".join(line for line in lines if line) + "\n"


def _num(x: float) -> str:
    # JSON has no NaN/Infinity; those go out as strings.
    s = fmt_float(x)
    return json.dumps(s) if s in ("NaN", "Infinity", "-Infinity") else s


def merge(suite: str, reports: Iterable[VerificationReport]) -> VerificationReport:
    out = VerificationReport(suite)
    for r in reports:
        out.extend(r.cases)
    return out
