"""Result record shared by the exhaustive verification suites."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class VerificationReport:
    suite: str
    graphs_checked: int = 0
    pairs_checked: int = 0
    counterexamples: list = field(default_factory=list)
    duration: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_dict(self, with_duration: bool = False) -> dict:
        out = {
            "suite": self.suite,
            "graphs_checked": self.graphs_checked,
            "pairs_checked": self.pairs_checked,
            "counterexamples": self.counterexamples,
            "passed": self.passed,
        }
        if with_duration:
            out["duration"] = self.duration
        return out
