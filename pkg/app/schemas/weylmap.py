from pydantic import BaseModel, field_validator
from typing import Dict, List, Optional, Tuple

from app.models.enums import SurjectivityStatus
from app.models.weyl import PullbackModule, WeylElement, WeylMapReport
from app.schemas.orbit import FunctionalInput
from app.utils.rational import format_rational

# [[alpha, beta], "num/den"]
WeylTerm = Tuple[Tuple[List[int], List[int]], str]


def weyl_terms(x: WeylElement) -> List[WeylTerm]:
    return [((list(alpha), list(beta)), format_rational(c)) for (alpha, beta), c in x.sorted_terms()]


class WeylMapRequest(BaseModel):
    """weylmap 请求"""
    functional: FunctionalInput
    surjectivity_depth: Optional[int] = None
    pullback_degree: Optional[int] = None

    @field_validator('surjectivity_depth')
    @classmethod
    def validate_depth(cls, v):
        if v is not None and v < 1:
            raise ValueError('满射性搜索词长必须不小于1')
        return v

    @field_validator('pullback_degree')
    @classmethod
    def validate_pullback_degree(cls, v):
        if v is not None and v < 0:
            raise ValueError('拉回截断次数不能为负')
        return v


class WitnessResponse(BaseModel):
    target: str
    terms: List[Tuple[List[str], str]]


class PullbackResponse(BaseModel):
    r: int
    D: int
    monomials: List[List[int]]
    matrices: Dict[str, List[List[str]]]
    exact_below: int
    relators_vanish: bool

    @classmethod
    def from_module(cls, module: PullbackModule) -> "PullbackResponse":
        return cls(
            r=module.r,
            D=module.D,
            monomials=[list(m) for m in module.monomials],
            matrices={
                label: [[format_rational(x) for x in row] for row in m.to_rows()]
                for label, m in module.matrices.items()
            },
            exact_below=module.exact_below,
            relators_vanish=module.relators_vanish,
        )


class WeylMapResponse(BaseModel):
    """YM(n) → A_r 映射报告"""
    n: int
    l: int
    weight: int
    functional: Dict[str, str]
    images: Dict[str, List[WeylTerm]]
    relator_check: bool
    lie_hom_check: bool
    surjectivity: Optional[SurjectivityStatus] = None
    surjectivity_depth: Optional[int] = None
    witnesses: List[WitnessResponse] = []
    pullback: Optional[PullbackResponse] = None

    @classmethod
    def from_report(cls, report: WeylMapReport, pullback: Optional[PullbackModule] = None) -> "WeylMapResponse":
        s = report.surjectivity
        return cls(
            n=report.n,
            l=report.l,
            weight=report.weight,
            functional={label: format_rational(c) for label, c in report.functional.items()},
            images={label: weyl_terms(x) for label, x in report.images.items()},
            relator_check=report.relator_check,
            lie_hom_check=report.lie_hom_check,
            surjectivity=s.status if s else None,
            surjectivity_depth=s.depth if s else None,
            witnesses=[
                WitnessResponse(target=w.target, terms=[(list(word), format_rational(c)) for word, c in w.terms])
                for w in (s.witnesses if s else ())
            ],
            pullback=PullbackResponse.from_module(pullback) if pullback else None,
        )
