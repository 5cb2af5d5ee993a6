"""Pydantic schemas for verification reports."""
from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, Field


class CheckRecord(BaseModel):
    identity: str
    anchor: str = Field(description="The identity being checked, written out")
    status: Literal['pass', 'fail']
    residual: str = Field(description="Exact residual in canonical text form; '0' when the check passes")
    parameters: Dict[str, str] = Field(default_factory=dict)
    wall_time: Optional[float] = None

    @property
    def passed(self) -> bool:
        return self.status == 'pass'


class SuiteReport(BaseModel):
    suite: str
    parameters: Dict[str, str] = Field(default_factory=dict)
    checks: List[CheckRecord] = Field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(1 for c in self.checks if c.passed)

    @property
    def failed(self) -> int:
        return len(self.checks) - self.passed


class AggregateReport(BaseModel):
    suites: List[SuiteReport]
    passed: int
    failed: int
    ok: bool

    @classmethod
    def from_suites(cls, suites: List[SuiteReport]) -> 'AggregateReport':
        passed = sum(s.passed for s in suites)
        failed = sum(s.failed for s in suites)
        return cls(suites=suites, passed=passed, failed=failed, ok=failed == 0)


class EvaluationResult(BaseModel):
    value: str = Field(description="Skein class over Z[t, t^-1] in canonical text form")
    specialized: Optional[str] = Field(default=None, description="The value at t = xi, when a root was given")
    xi: Optional[str] = None
    crossings: int
    states: int
