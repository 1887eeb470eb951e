from fastapi import APIRouter, Query

from app.schemas.common import ApiResponse
from app.schemas.series import SeriesResponse
from app.utils.deps import domain_errors

# 精确计算是同步的 CPU 任务, 处理函数用 def, 由 FastAPI 放进线程池执行
router = APIRouter(prefix="/api/v1/series", tags=["series"])


@router.get("", response_model=ApiResponse[SeriesResponse])
def get_series(
    n: int = Query(..., ge=2, description="生成元个数"),
    D: int = Query(10, ge=0, le=200, description="截断次数"),
):
    """Hilbert 级数, Möbius 维数表与自由性恒等式"""
    with domain_errors():
        return ApiResponse.success_response(data=SeriesResponse.compute(n, D), message="级数计算成功")
