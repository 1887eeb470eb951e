from pydantic import BaseModel
from typing import List

from app.services import koszul


class KoszulSliceResponse(BaseModel):
    """第 p 片的同调维数 [h0, h1, h2, h3]"""
    p: int
    dims: List[int]
    closed_form_h1: int


class KoszulResponse(BaseModel):
    n: int
    max_p: int
    slices: List[KoszulSliceResponse]
    w_dims: List[int]     # W(n)_m, m = 2..max_p+1

    @classmethod
    def compute(cls, n: int, max_p: int) -> "KoszulResponse":
        slices = []
        for p in range(max_p + 1):
            koszul.build_slice(n, p)
            dims = koszul.homology_dims(n, p)
            slices.append(KoszulSliceResponse(p=p, dims=list(dims.as_tuple()), closed_form_h1=koszul.closed_form_h1(n, p)))
        return cls(n=n, max_p=max_p, slices=slices, w_dims=koszul.w_dims(n, max_p + 1) if max_p >= 1 else [])
