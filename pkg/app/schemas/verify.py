from pydantic import BaseModel
from typing import List

from app.models.acceptance import VerificationReport


class CriterionResponse(BaseModel):
    number: int
    name: str
    passed: bool
    detail: str


class VerifyResponse(BaseModel):
    """verify-all 的结构化结果 (不含耗时)"""
    passed: bool
    criteria: List[CriterionResponse]

    @classmethod
    def from_report(cls, report: VerificationReport) -> "VerifyResponse":
        return cls(
            passed=report.passed,
            criteria=[
                CriterionResponse(number=c.number, name=c.name, passed=c.passed, detail=c.detail)
                for c in report.criteria
            ],
        )
