from pydantic import BaseModel
from typing import Dict, List, Optional

from app.models.nilpotent import GradedNilpotentLie
from app.services import ymquotient


class BasisElementResponse(BaseModel):
    """规范基元"""
    index: int
    degree: int
    label: str
    tree: str


class QuotientResponse(BaseModel):
    """ym(n)/C^l 的构造结果"""
    n: int
    l: int
    dims: List[int]
    total: int
    basis: List[BasisElementResponse]
    lower_central_series: List[int]
    reference_basis_verified: Optional[bool] = None
    identities: Optional[Dict[str, bool]] = None

    @classmethod
    def from_algebra(
        cls,
        g: GradedNilpotentLie,
        verify_reference_basis: bool = False,
        identities: bool = False,
    ) -> "QuotientResponse":
        return cls(
            n=g.n,
            l=g.l,
            dims=g.degree_dims(),
            total=g.dim,
            basis=[
                BasisElementResponse(index=b.index, degree=b.degree, label=b.label, tree=b.tree)
                for b in g.basis
            ],
            lower_central_series=ymquotient.lower_central_series(g),
            reference_basis_verified=ymquotient.verify_reference_basis(g.l) if verify_reference_basis else None,
            identities=ymquotient.verify_reference_identities() if identities else None,
        )
