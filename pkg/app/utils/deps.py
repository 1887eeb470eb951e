from contextlib import contextmanager

from fastapi import HTTPException, Query, status

from app.config.settings import settings
from app.models.nilpotent import GradedNilpotentLie
from app.models.orbit import Functional
from app.schemas.orbit import FunctionalInput
from app.services import orbit, ymquotient
from app.utils.exceptions import ConsistencyError, InvalidInputError


@contextmanager
def domain_errors():
    """把领域异常转换为 HTTP 错误: 输入错误 400, 一致性失败 500"""
    try:
        yield
    except InvalidInputError as e:
        raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=str(e))
    except ConsistencyError as e:
        raise HTTPException(status_code=status.HTTP_500_INTERNAL_SERVER_ERROR, detail=str(e))


def check_degree(value: int, name: str):
    if value > settings.degree_cap:
        raise InvalidInputError(f"{name} = {value} 超过全局次数上限 {settings.degree_cap}")


def get_algebra(
    n: int = Query(..., ge=2, description="生成元个数"),
    l: int = Query(..., ge=1, description="幂零截断"),
) -> GradedNilpotentLie:
    """构造 ym(n)/C^l 的依赖项"""
    with domain_errors():
        return ymquotient.build(n, l)


def load_functional(payload: FunctionalInput) -> Functional:
    """按请求中的代数参数构造代数并解析泛函"""
    check_degree(payload.algebra.l, "l")
    g = ymquotient.build(payload.algebra.n, payload.algebra.l)
    return orbit.functional_from_labels(g, payload.coords, payload.convention)
