"""
Report Data Models
==================

Models for experiment reports and verdicts.
"""

import json
from enum import Enum
from typing import Any

from pydantic import BaseModel, Field


class ReportStatus(str, Enum):
    """Overall outcome of an experiment."""
    PASS = "pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"
    ERROR = "error"


class Verdict(BaseModel):
    """A single check with a stated expectation."""
    name: str
    expected: Any
    observed: Any
    passed: bool


class ExperimentReport(BaseModel):
    """
    Result of one experiment run.
    Everything except ``duration_seconds`` is deterministic for fixed inputs.
    """
    experiment: str
    inputs: dict[str, Any] = Field(default_factory=dict)
    outputs: dict[str, Any] = Field(default_factory=dict)
    verdicts: list[Verdict] = Field(default_factory=list)
    status: ReportStatus = ReportStatus.PASS
    message: str | None = None

    # Timing
    duration_seconds: float = 0.0

    def check(self, name: str, expected: Any, observed: Any, passed: bool | None = None) -> bool:
        """Record a verdict; ``passed`` defaults to expected == observed."""
        ok = expected == observed if passed is None else passed
        self.verdicts.append(Verdict(name=name, expected=expected, observed=observed, passed=ok))
        return ok

    def finalize(self) -> "ExperimentReport":
        """Derive the status from the verdicts unless already errored or inconclusive."""
        if self.status in (ReportStatus.ERROR, ReportStatus.INCONCLUSIVE):
            return self
        self.status = ReportStatus.PASS if all(v.passed for v in self.verdicts) else ReportStatus.FAIL
        return self

    @property
    def passed(self) -> bool:
        return self.status == ReportStatus.PASS

    def canonical(self) -> dict[str, Any]:
        return self.model_dump(mode="json", exclude={"duration_seconds"})

    def canonical_json(self) -> str:
        return json.dumps(self.canonical(), sort_keys=True, indent=2)
