from pydantic import BaseModel
from typing import List

from app.services import series


class SeriesResponse(BaseModel):
    """Hilbert 级数与维数表"""
    n: int
    D: int
    lie_dims: List[int]            # N(n)_1..N(n)_D
    hilbert: List[int]             # h_YM(n) 的系数 t^0..t^D
    w: List[int]                   # W(n)(t) 的系数
    w_special_grading: List[int]   # 特殊分次下的 W(n)(t)
    euler_characteristic: List[int]
    freeness: bool
    pbw_check: bool

    @classmethod
    def compute(cls, n: int, D: int) -> "SeriesResponse":
        dims = series.lie_dims_moebius(n, D)
        w = series.w_series(n, D)
        return cls(
            n=n,
            D=D,
            lie_dims=dims.as_list(D),
            hilbert=series.hilbert_ym(n, D).as_list(),
            w=w.as_list(),
            w_special_grading=series.special_grading(w).as_list(),
            euler_characteristic=series.euler_characteristic_series(n, D).as_list(),
            freeness=series.freeness_identity(n, D),
            pbw_check=series.pbw_check(n, dims, D),
        )
