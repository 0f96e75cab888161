"""Line-delimited JSON verification reports.

A report is one JSON object per line: a ``header`` record, one ``check`` record
per verification, optionally an ``internal_error`` record, and a ``summary``
record, followed by ``#``-prefixed human-readable footer lines.  Keys are
sorted and separators fixed, so equal runs give byte-identical files.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from . import __version__

SCHEMA = "rsfactors.report/1"

PASS, FAIL, SKIP = "pass", "fail", "skip"


@dataclass
class Check:
    name: str
    anchor: str
    inputs: dict[str, Any]
    expected: Any
    got: Any
    verdict: str
    note: str | None = None

    def record(self) -> dict:
        rec = {
            "record": "check",
            "name": self.name,
            "anchor": self.anchor,
            "inputs": self.inputs,
            "expected": self.expected,
            "got": self.got,
            "verdict": self.verdict,
        }
        if self.note:
            rec["note"] = self.note
        return rec


@dataclass
class Report:
    pipeline: str
    inputs: dict[str, Any]
    seed: int
    checks: list[Check] = field(default_factory=list)
    internal_error: str | None = None
    duration_s: float | None = None

    def add(self, name, anchor, inputs, expected, got, ok: bool | None, note=None) -> Check:
        verdict = SKIP if ok is None else (PASS if ok else FAIL)
        chk = Check(name, anchor, inputs, expected, got, verdict, note)
        self.checks.append(chk)
        return chk

    @property
    def counts(self) -> dict[str, int]:
        out = {PASS: 0, FAIL: 0, SKIP: 0}
        for c in self.checks:
            out[c.verdict] += 1
        return out

    @property
    def overall(self) -> str:
        if self.internal_error:
            return "error"
        return PASS if self.counts[FAIL] == 0 else FAIL

    def records(self) -> list[dict]:
        recs = [
            {
                "record": "header",
                "schema": SCHEMA,
                "version": __version__,
                "pipeline": self.pipeline,
                "seed": self.seed,
                "inputs": self.inputs,
            }
        ]
        recs.extend(c.record() for c in self.checks)
        if self.internal_error:
            recs.append({"record": "internal_error", "message": self.internal_error})
        summary = {"record": "summary", "overall": self.overall, **self.counts, "checks": len(self.checks)}
        if self.duration_s is not None:
            summary["duration_s"] = round(self.duration_s, 3)
        recs.append(summary)
        return recs

    def footer(self) -> list[str]:
        c = self.counts
        lines = [
            f"# rsfactors {__version__} pipeline={self.pipeline} seed={self.seed}",
            f"# checks={len(self.checks)} pass={c[PASS]} fail={c[FAIL]} skip={c[SKIP]} overall={self.overall.upper()}",
        ]
        for chk in self.checks:
            if chk.verdict == FAIL:
                why = f" ({chk.note})" if chk.note else ""
                lines.append(f"# FAIL {chk.name}{why}: expected {chk.expected} got {chk.got}")
        if self.internal_error:
            lines.append(f"# INTERNAL ERROR {self.internal_error}")
        return lines

    def render(self) -> str:
        body = [json.dumps(r, sort_keys=True, separators=(",", ":"), ensure_ascii=False) for r in self.records()]
        return "\n".join(body + self.footer()) + "\n"


def read_report(text: str) -> list[dict]:
    """Parse the JSON records of a rendered report (footer lines are skipped)."""
    return [json.loads(line) for line in text.splitlines() if line and not line.startswith("#")]
