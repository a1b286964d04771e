from __future__ import annotations
"""Report models for the check suites."""

from typing import List, Optional

from pydantic import BaseModel, Field

__all__ = ["CaseResult", "SuiteReport"]


class CaseResult(BaseModel):
    """One generated instance and its verdict."""

    index: int
    instance: str
    passed: bool
    detail: Optional[str] = None

    class Config:
        validate_assignment = True


class SuiteReport(BaseModel):
    suite: str
    statement: str
    theorem: str = ""
    seed: int
    max_size: int
    cases: int
    passed: bool = True
    results: List[CaseResult] = Field(default_factory=list)
    counterexample: Optional[CaseResult] = None

    class Config:
        validate_assignment = True

    def header(self) -> str:
        if self.theorem:
            return f"[{self.suite}] {self.theorem}: {self.statement}"
        return f"[{self.suite}] {self.statement}"

    def to_text(self) -> str:
        """Human-readable summary; a failing report ends with the counterexample instance."""
        lines = [self.header(), f"seed={self.seed} max_size={self.max_size} cases={len(self.results)}/{self.cases}"]
        if self.passed:
            lines.append("PASS")
        else:
            cx = self.counterexample
            lines.append(f"FAIL at case {cx.index}: {cx.detail}")
            lines.append(cx.instance.rstrip("\n"))
        return "\n".join(lines) + "\n"
