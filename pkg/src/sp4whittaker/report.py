"""Structured verification reports and deterministic serialization.

JSON output is byte-stable across runs: keys are emitted sorted, floats are
printed with 17 significant digits, and all container orders are fixed by
the producers.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

PASS, FAIL, MISMATCH = "PASS", "FAIL", "MISMATCH"


@dataclass
class Case:
    name: str
    status: str
    citation: str
    max_residual: float | None = None
    detail: dict | None = None


@dataclass
class Report:
    suite: str
    cases: list[Case] = field(default_factory=list)
    expected_mismatches: list[str] = field(default_factory=list)

    def add(self, name: str, status: str, citation: str,
            max_residual: float | None = None, detail: dict | None = None):
        self.cases.append(Case(name, status, citation, max_residual, detail))

    def extend(self, other: "Report"):
        self.cases.extend(other.cases)
        self.expected_mismatches.extend(other.expected_mismatches)

    @property
    def counts(self) -> dict:
        out = {PASS: 0, FAIL: 0, MISMATCH: 0}
        for c in self.cases:
            out[c.status] = out.get(c.status, 0) + 1
        return out

    @property
    def ok(self) -> bool:
        """Exit-status contract: no FAIL; expected MISMATCH entries do not fail."""
        return self.counts.get(FAIL, 0) == 0

    def to_jsonable(self) -> dict:
        cases = []
        for c in self.cases:
            row = {"name": c.name, "status": c.status, "citation": c.citation}
            if c.max_residual is not None:
                row["max_residual"] = c.max_residual
            if c.detail:
                row["detail"] = c.detail
            cases.append(row)
        out = {"suite": self.suite, "cases": cases, "summary": self.counts}
        if self.expected_mismatches:
            out["expected_mismatches"] = sorted(set(self.expected_mismatches))
        return out


def _fmt_float(x: float) -> str:
    if x != x:
        return '"nan"'
    if x == float("inf"):
        return '"inf"'
    if x == float("-inf"):
        return '"-inf"'
    if x == int(x) and abs(x) < 1e16:
        return f"{x:.1f}"
    return format(x, ".17g")


def dumps(obj) -> str:
    """Deterministic JSON with sorted keys and 17-significant-digit floats."""
    if obj is None:
        return "null"
    if obj is True:
        return "true"
    if obj is False:
        return "false"
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=True)
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _fmt_float(obj)
    if isinstance(obj, dict):
        keys = sorted(obj.keys(), key=str)
        body = ",".join(f"{json.dumps(str(k))}:{dumps(v)}" for k, v in
                        ((k, obj[k]) for k in keys))
        return "{" + body + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(dumps(v) for v in obj) + "]"
    if hasattr(obj, "to_jsonable"):
        return dumps(obj.to_jsonable())
    raise TypeError(f"cannot serialize {type(obj).__name__}")
