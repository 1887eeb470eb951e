from typing import Optional, Tuple


class YMError(Exception):
    """计算平台异常基类"""
    exit_code = 1


class InvalidInputError(YMError):
    """输入参数错误"""
    exit_code = 2


class UnsupportedError(InvalidInputError):
    """不支持的参数组合"""


class NotLieElementError(InvalidInputError):
    """张量不在自由李代数的像中"""


class ConsistencyError(YMError):
    """内部一致性检查失败, 消息中给出失败的不变量"""
    exit_code = 1

    def __init__(self, invariant: str, detail: str = ""):
        self.invariant = invariant
        self.detail = detail
        message = f"不变量 {invariant} 失败"
        if detail:
            message = f"{message}: {detail}"
        super().__init__(message)


class InterpolationError(ConsistencyError):
    """Weyl 元插值不一致, 通常是截断次数过小"""

    def __init__(self, label: str, monomial: Optional[Tuple[int, ...]], detail: str = ""):
        self.label = label
        self.monomial = monomial
        super().__init__(
            "extract_weyl.interpolation",
            f"基元 {label} 在单项式 {monomial} 上不一致 {detail}".rstrip(),
        )
