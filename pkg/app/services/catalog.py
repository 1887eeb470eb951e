"""ym(3) 的具名基 B_1..B_4, 四次恒等式与四个参考泛函

标签采用右嵌套约定 x_{ijk} = [x_i,[x_j,x_k]], x_{ijkl} = [x_i,[x_j,[x_k,x_l]]].
"""
from fractions import Fraction
from typing import Dict, List, Tuple

from pydantic import BaseModel

REFERENCE_BASES: Dict[int, List[str]] = {
    1: ["x1", "x2", "x3"],
    2: ["x1", "x2", "x3", "x12", "x13", "x23"],
    3: ["x1", "x2", "x3", "x12", "x13", "x23", "x112", "x221", "x113", "x123", "x312"],
    4: ["x1", "x2", "x3", "x12", "x13", "x23", "x112", "x221", "x113", "x123", "x312",
        "x1112", "x1221", "x1113", "x1123", "x2221", "x2113", "x2312", "x3112", "x3221", "x3312"],
}

# (左端标签, 右端线性组合, 成立的截断 l)
REFERENCE_IDENTITIES: List[Tuple[str, Dict[str, Fraction], int]] = [
    ("x332", {"x112": Fraction(-1)}, 3),
    ("x331", {"x221": Fraction(-1)}, 3),
    ("x223", {"x113": Fraction(-1)}, 3),
    ("x213", {"x123": Fraction(1), "x312": Fraction(1)}, 3),
    ("x3113", {"x1221": Fraction(1)}, 4),
    ("x2112", {"x1221": Fraction(-1)}, 4),
    ("x2123", {"x3221": Fraction(1), "x2312": Fraction(1), "x1113": Fraction(-1)}, 4),
    ("x1312", {"x3112": Fraction(1, 2), "x2113": Fraction(1, 2), "x1123": Fraction(-1, 2)}, 4),
    ("x3123", {"x1112": Fraction(1, 2), "x2221": Fraction(1, 2), "x3312": Fraction(-1, 2)}, 4),
]

_J4 = ["x1112", "x1221", "x1113", "x1123", "x2221", "x2113", "x2312", "x3112", "x3221", "x3312"]


class ReferenceFunctional(BaseModel):
    """ym(3)/C^l 上的参考泛函及其已知的从属子代数"""
    name: str
    l: int
    coords: Dict[str, str]
    expected_weight: int
    polarization: List[str]


REFERENCE_FUNCTIONALS: List[ReferenceFunctional] = [
    ReferenceFunctional(
        name="weight1", l=2, coords={"x13": "1", "x23": "1"}, expected_weight=1,
        polarization=["x1", "x2", "x12", "x13", "x23"],
    ),
    ReferenceFunctional(
        name="weight2", l=3, coords={"x112": "1"}, expected_weight=2,
        polarization=["x2", "x12", "x13", "x23", "x112", "x221", "x113", "x123", "x312"],
    ),
    ReferenceFunctional(
        name="weight3", l=3, coords={"x112": "1", "x123": "1"}, expected_weight=3,
        polarization=["x12", "x13", "x23", "x112", "x221", "x113", "x123", "x312"],
    ),
    ReferenceFunctional(
        name="weight4", l=4, coords={"x312": "1", "x2312": "1", "x1112": "1"}, expected_weight=4,
        polarization=["x12", "x13", "x112", "x221", "x113", "x123", "x312"] + _J4,
    ),
]
