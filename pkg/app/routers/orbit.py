from fastapi import APIRouter

from app.schemas.common import ApiResponse
from app.schemas.orbit import FunctionalInput, PolarizationResponse
from app.services import orbit
from app.utils.deps import domain_errors, load_functional

# 精确计算是同步的 CPU 任务, 处理函数用 def, 由 FastAPI 放进线程池执行
router = APIRouter(prefix="/api/v1/orbit", tags=["orbit"])


@router.post("", response_model=ApiResponse[PolarizationResponse])
def polarize(payload: FunctionalInput):
    """泛函的根维数, 标准极化与权"""
    with domain_errors():
        f = load_functional(payload)
        report = orbit.standard_polarization(f.algebra, f)
    return ApiResponse.success_response(data=PolarizationResponse.from_report(report), message="极化计算成功")
