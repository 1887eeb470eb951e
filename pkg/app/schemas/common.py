from pydantic import BaseModel, field_validator
from typing import Generic, TypeVar, Optional

from app.utils.rational import format_rational, parse_rational

T = TypeVar('T')


class ApiResponse(BaseModel, Generic[T]):
    """API响应模式"""
    success: bool = True
    message: str = "计算成功"
    data: Optional[T] = None

    @classmethod
    def success_response(cls, data: T = None, message: str = "计算成功"):
        return cls(success=True, message=message, data=data)


class AlgebraRef(BaseModel):
    """ym(n)/C^l 的参数"""
    n: int
    l: int

    @field_validator('n')
    @classmethod
    def validate_n(cls, v):
        if v < 2:
            raise ValueError('生成元个数 n 必须不小于2')
        return v

    @field_validator('l')
    @classmethod
    def validate_l(cls, v):
        if v < 1:
            raise ValueError('截断 l 必须不小于1')
        return v


def validate_rational_text(v: str) -> str:
    """检查有理数字符串并规范化"""
    return format_rational(parse_rational(v))
