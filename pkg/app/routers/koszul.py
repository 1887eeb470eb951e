from fastapi import APIRouter, Query

from app.schemas.common import ApiResponse
from app.schemas.koszul import KoszulResponse
from app.utils.deps import check_degree, domain_errors

# 精确计算是同步的 CPU 任务, 处理函数用 def, 由 FastAPI 放进线程池执行
router = APIRouter(prefix="/api/v1/koszul", tags=["koszul"])


@router.get("", response_model=ApiResponse[KoszulResponse])
def get_koszul(
    n: int = Query(..., ge=2, description="生成元个数"),
    max_p: int = Query(4, ge=0, description="最大片下标"),
):
    """Koszul 复形各片的同调维数与 W(n)"""
    with domain_errors():
        check_degree(max_p, "max_p")
        data = KoszulResponse.compute(n, max_p)
    return ApiResponse.success_response(data=data, message="同调计算成功")
