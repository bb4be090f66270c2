"""Verification reports and their JSON-lines form."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional

EXHAUSTIVE = "exhaustive"
TARGETED = "targeted"
SAMPLED = "sampled"


@dataclass
class Violation:
    graph6: str
    detail: str
    witness: Optional[list] = None  # e.g. the vertices of an offending cycle

    def to_json(self) -> dict:
        out = {"graph6": self.graph6, "detail": self.detail}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class VerificationReport:
    target: str
    params: dict
    mode: str
    checked: int = 0
    violations: list[Violation] = field(default_factory=list)
    seed: Optional[int] = None
    space: Optional[int] = None  # size of the full instance space when known
    complete: bool = True  # False once a budget cut the run short
    notes: dict = field(default_factory=dict)
    elapsed_ms: Optional[int] = None

    def add(self, graph6: str, detail: str, witness: Optional[list] = None) -> None:
        self.violations.append(Violation(graph6, detail, witness))

    def finish(self, started: float) -> "VerificationReport":
        self.violations.sort(key=lambda v: (v.graph6, v.detail))
        self.elapsed_ms = int((time.perf_counter() - started) * 1000)
        return self

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self, timing: bool = True) -> dict[str, Any]:
        out: dict[str, Any] = {"target": self.target, "params": self.params, "mode": self.mode}
        if self.seed is not None:
            out["seed"] = self.seed
        out["checked"] = self.checked
        out["violations"] = [v.to_json() for v in self.violations]
        if self.space is not None:
            out["space"] = self.space
        out["complete"] = self.complete
        if self.notes:
            out["notes"] = self.notes
        out["elapsed_ms"] = self.elapsed_ms if timing else None
        return out

    def to_line(self, timing: bool = True) -> str:
        return json.dumps(self.to_json(timing), sort_keys=False, separators=(", ", ": "))


def append_jsonl(path: Path | str, reports: list[VerificationReport], timing: bool = True) -> None:
    with open(path, "a", encoding="utf-8") as fh:
        for r in reports:
            fh.write(r.to_line(timing) + "\n")


def read_jsonl(path: Path | str) -> list[dict]:
    with open(path, encoding="utf-8") as fh:
        return [json.loads(line) for line in fh if line.strip()]
