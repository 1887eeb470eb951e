from fractions import Fraction
from typing import Union

Rational = Fraction


def format_rational(q: Fraction) -> str:
    """有理数序列化为 "num/den" (分母为1时省略)"""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(value: Union[str, int, Fraction]) -> Fraction:
    """解析 "a/b", "a" 或整数形式的有理数"""
    if isinstance(value, bool):
        raise ValueError(f"无法解析为有理数: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if not isinstance(value, str):
        raise ValueError(f"无法解析为有理数: {value!r}")
    text = value.strip()
    if not text:
        raise ValueError("有理数字符串不能为空")
    try:
        num, _, den = text.partition("/")
        if den:
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"无法解析为有理数: {value!r}")
