from fastapi import APIRouter, Depends, Query

from app.models.nilpotent import GradedNilpotentLie
from app.schemas.common import ApiResponse
from app.schemas.quotient import QuotientResponse
from app.utils.deps import domain_errors, get_algebra

# 精确计算是同步的 CPU 任务, 处理函数用 def, 由 FastAPI 放进线程池执行
router = APIRouter(prefix="/api/v1/quotient", tags=["quotient"])


@router.get("", response_model=ApiResponse[QuotientResponse])
def get_quotient(
    g: GradedNilpotentLie = Depends(get_algebra),
    verify_reference_basis: bool = Query(False, description="验证具名基 B_l (仅 n = 3, l <= 4)"),
    identities: bool = Query(False, description="检查具名恒等式"),
):
    """ym(n)/C^l 的规范基与各次维数"""
    with domain_errors():
        data = QuotientResponse.from_algebra(g, verify_reference_basis=verify_reference_basis, identities=identities)
    return ApiResponse.success_response(data=data, message="商代数构造成功")
