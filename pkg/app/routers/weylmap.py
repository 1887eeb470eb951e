from fastapi import APIRouter

from app.schemas.common import ApiResponse
from app.schemas.weylmap import WeylMapRequest, WeylMapResponse
from app.services import weyl
from app.utils.deps import domain_errors, load_functional

# 精确计算是同步的 CPU 任务, 处理函数用 def, 由 FastAPI 放进线程池执行
router = APIRouter(prefix="/api/v1/weylmap", tags=["weylmap"])


@router.post("", response_model=ApiResponse[WeylMapResponse])
def weyl_map(payload: WeylMapRequest):
    """由泛函构造 YM(n) → A_r 并检查关系, 同态性与满射性"""
    with domain_errors():
        f = load_functional(payload.functional)
        g = f.algebra
        report = weyl.ym_weyl_map(g.n, g.l, f, surjectivity_depth=payload.surjectivity_depth)
        pullback = None
        if payload.pullback_degree is not None:
            pullback = weyl.pullback_module(report, payload.pullback_degree)
    return ApiResponse.success_response(data=WeylMapResponse.from_report(report, pullback), message="Weyl 映射构造成功")
