"""Structured verdict objects shared by check drivers, oracles, and the CLI."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class CheckReport:
    """Outcome of one suite run: pass / violated / skipped, plus evidence."""

    suite: str
    params: dict
    verdict: str  # "pass" | "violated" | "skipped"
    samples: int = 0
    counterexample: dict | None = None
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {
            "suite": self.suite,
            "params": self.params,
            "verdict": self.verdict,
            "samples": self.samples,
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.detail:
            out["detail"] = self.detail
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(", ", ": "))

    @property
    def exit_code(self) -> int:
        if self.verdict == "pass":
            return 0
        if self.verdict == "violated":
            return 1
        if self.verdict == "skipped":
            return 3
        raise ValueError(f"unknown verdict {self.verdict!r}")
