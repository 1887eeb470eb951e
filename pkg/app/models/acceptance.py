from dataclasses import dataclass
from typing import Tuple


@dataclass(frozen=True)
class CriterionResult:
    """一条验收标准的结果"""
    number: int
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class VerificationReport:
    criteria: Tuple[CriterionResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.criteria)

    def failures(self) -> Tuple[CriterionResult, ...]:
        return tuple(c for c in self.criteria if not c.passed)
