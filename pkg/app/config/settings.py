from pydantic_settings import BaseSettings
from typing import List


class Settings(BaseSettings):
    """应用配置设置"""

    # 应用配置
    app_name: str = "Yang-Mills 代数计算平台"
    app_version: str = "1.0.0"
    debug: bool = False
    log_level: str = "INFO"

    # CORS配置
    allowed_origins: List[str] = ["http://localhost:3000", "http://localhost:8080", "http://localhost:5173"]

    # 计算规模上限
    degree_cap: int = 10              # 全局次数上限 (YM_DEGREE_CAP)
    max_generators: int = 9           # 标签使用单个数字, 生成元个数不超过9
    jacobi_check_max_degree: int = 6  # build 时对所有基三元组验证 Jacobi 的最大截断
    straightening_step_limit: int = 2_000_000

    # Weyl 代数相关默认值
    surjectivity_depth: int = 3
    interpolation_margin: int = 2     # 截断次数 D = 幂零类 + margin

    # 验收套件配置
    random_seed: int = 20260101
    acceptance_max_l: int = 8
    acceptance_random_functionals: int = 100
    acceptance_random_matrices: int = 500
    acceptance_weyl_triples: int = 200

    class Config:
        env_file = ".env"
        env_prefix = "YM_"
        case_sensitive = False
        extra = "ignore"  # 忽略额外的字段


# 创建全局设置实例
settings = Settings()
