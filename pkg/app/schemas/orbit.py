import re

from pydantic import BaseModel, field_validator
from typing import Dict, List, Optional

from app.models.enums import LabelConvention
from app.models.orbit import PolarizationReport
from app.schemas.common import AlgebraRef, validate_rational_text
from app.utils.rational import format_rational

LABEL_PATTERN = re.compile(r"^x[1-9]+$")


class FunctionalInput(BaseModel):
    """泛函输入, 例如 {"algebra": {"n": 3, "l": 3}, "coords": {"x112": "1", "x123": "1"}}"""
    algebra: AlgebraRef
    coords: Dict[str, str]
    convention: Optional[LabelConvention] = None

    @field_validator('coords', mode='before')
    @classmethod
    def validate_coords(cls, v):
        if not isinstance(v, dict):
            raise ValueError('coords 必须是标签到有理数的映射')
        out = {}
        for label, value in v.items():
            if not LABEL_PATTERN.match(label):
                raise ValueError(f'标签格式不正确: {label}')
            if isinstance(value, bool) or not isinstance(value, (str, int)):
                raise ValueError(f'标签 {label} 的系数必须是字符串或整数')
            out[label] = validate_rational_text(str(value))
        return dict(sorted(out.items()))


class PolarizationResponse(BaseModel):
    """标准极化报告"""
    n: int
    l: int
    dim: int
    functional: Dict[str, str]
    radical_dim: int
    polarization_basis: List[Dict[str, str]]
    weight: int

    @classmethod
    def from_report(cls, report: PolarizationReport) -> "PolarizationResponse":
        g = report.f.algebra
        return cls(
            n=g.n,
            l=g.l,
            dim=g.dim,
            functional={label: format_rational(c) for label, c in report.f.by_label().items()},
            radical_dim=report.radical_dim,
            polarization_basis=[
                {label: format_rational(c) for label, c in v.items()} for v in report.polarization.labels()
            ],
            weight=report.weight,
        )
