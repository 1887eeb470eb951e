"""命令行入口: python -m app <子命令> ...

JSON 只写到标准输出或 --output 指定的文件, 人类可读的信息经日志写到标准错误.
退出码: 0 成功, 1 不变量/一致性失败, 2 输入错误.
"""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from pydantic import BaseModel, ValidationError

from app.config.settings import settings
from app.models.enums import Subcommand
from app.schemas.koszul import KoszulResponse
from app.schemas.orbit import FunctionalInput, PolarizationResponse
from app.schemas.quotient import QuotientResponse
from app.schemas.series import SeriesResponse
from app.schemas.verify import VerifyResponse
from app.schemas.weylmap import WeylMapResponse
from app.services import acceptance, orbit, weyl, ymquotient
from app.utils.deps import check_degree, load_functional
from app.utils.exceptions import InvalidInputError, YMError
from app.utils.log import setup_logging

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="python -m app", description="Yang-Mills 代数精确计算")
    parser.add_argument("--output", type=Path, help="把 JSON 写入文件而不是标准输出")
    parser.add_argument("--log-level", default=settings.log_level, help="日志级别")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(Subcommand.SERIES.value, help="Hilbert 级数与维数表")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--D", type=int, default=10)

    p = sub.add_parser(Subcommand.QUOTIENT.value, help="构造 ym(n)/C^l")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--verify-reference-basis", "--verify-paper-basis", dest="verify_reference_basis", action="store_true", help="验证具名基 B_l")
    p.add_argument("--identities", action="store_true", help="检查具名恒等式")

    p = sub.add_parser(Subcommand.KOSZUL.value, help="Koszul 同调维数")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-p", type=int, default=4)

    for command in (Subcommand.ORBIT, Subcommand.WEYLMAP):
        p = sub.add_parser(command.value)
        p.add_argument("--functional", type=Path, required=True, help="泛函 JSON 文件")
        p.add_argument("--n", type=int)
        p.add_argument("--l", type=int)
        if command == Subcommand.WEYLMAP:
            p.add_argument("--surjectivity-depth", type=int, default=settings.surjectivity_depth)
            p.add_argument("--pullback-degree", type=int)

    sub.add_parser(Subcommand.VERIFY_ALL.value, help="运行全部验收标准")
    return parser


def read_functional(path: Path, n: Optional[int], l: Optional[int]) -> FunctionalInput:
    """读取泛函文件; 命令行给出的 n, l 必须与文件一致, 文件缺少 algebra 时用命令行参数补全"""
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except OSError as e:
        raise InvalidInputError(f"无法读取泛函文件 {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise InvalidInputError(f"泛函文件不是合法 JSON: {e}") from e
    if not isinstance(data, dict):
        raise InvalidInputError("泛函文件的顶层必须是对象")
    algebra = data.get("algebra")
    if algebra is None:
        if n is None or l is None:
            raise InvalidInputError("泛函文件缺少 algebra 时必须给出 --n 和 --l")
        data["algebra"] = {"n": n, "l": l}
    elif isinstance(algebra, dict):
        for key, value in (("n", n), ("l", l)):
            if value is not None and algebra.get(key) != value:
                raise InvalidInputError(f"--{key} {value} 与泛函文件中的 {key} = {algebra.get(key)} 不一致")
    return FunctionalInput.model_validate(data)


def dispatch(args: argparse.Namespace) -> BaseModel:
    command = Subcommand(args.command)
    if command == Subcommand.SERIES:
        return SeriesResponse.compute(args.n, args.D)
    if command == Subcommand.QUOTIENT:
        g = ymquotient.build(args.n, args.l)
        response = QuotientResponse.from_algebra(g, args.verify_reference_basis, args.identities)
        logger.info(f"ym({g.n})/C^{g.l}: 各次维数 {response.dims}, 总维数 {response.total}")
        return response
    if command == Subcommand.KOSZUL:
        check_degree(args.max_p, "max_p")
        response = KoszulResponse.compute(args.n, args.max_p)
        for s in response.slices:
            logger.info(f"p = {s.p}: [h0, h1, h2, h3] = {s.dims}")
        return response
    if command == Subcommand.ORBIT:
        f = load_functional(read_functional(args.functional, args.n, args.l))
        return PolarizationResponse.from_report(orbit.standard_polarization(f.algebra, f))
    if command == Subcommand.WEYLMAP:
        if args.surjectivity_depth < 1:
            raise InvalidInputError("--surjectivity-depth 必须不小于1")
        f = load_functional(read_functional(args.functional, args.n, args.l))
        g = f.algebra
        report = weyl.ym_weyl_map(g.n, g.l, f, surjectivity_depth=args.surjectivity_depth)
        pullback = weyl.pullback_module(report, args.pullback_degree) if args.pullback_degree is not None else None
        for label, x in report.images.items():
            logger.info(f"{label} ↦ {x}")
        return WeylMapResponse.from_report(report, pullback)
    return VerifyResponse.from_report(acceptance.verify_all())


def emit(response: BaseModel, output: Optional[Path]):
    text = response.model_dump_json(indent=2)
    if output is None:
        sys.stdout.write(text + "\n")
    else:
        output.write_text(text + "\n", encoding="utf-8")


def run(argv: Optional[List[str]] = None) -> int:
    """执行一条命令并返回退出码"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2
    setup_logging(args.log_level)
    try:
        response = dispatch(args)
    except ValidationError as e:
        logger.error(f"输入校验失败: {e}")
        return 2
    except YMError as e:
        logger.error(str(e))
        return e.exit_code
    emit(response, args.output)
    if isinstance(response, VerifyResponse) and not response.passed:
        for c in response.criteria:
            if not c.passed:
                logger.error(f"标准 {c.number} {c.name} 失败: {c.detail}")
        return 1
    return 0


def main():
    sys.exit(run())
