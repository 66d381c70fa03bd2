"""主程序入口"""

import argparse
import configparser
import re
import sys
import traceback
from typing import List, Optional

from goodint.exceptions import DomainError, InconsistencyError
from goodint.goodness.decider import classify_special_case, decide
from goodint.models import GoodnessConfig, GoodnessVerdict
from goodint.oracle.brute_force import divides_power_sum
from goodint.processor.batch_enumerator import GoodIntegerEnumerator
from goodint.report import build_record, to_json
from goodint.split.splitter import build_context

EXIT_GOOD = 0
EXIT_BAD = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

_INTEGER = re.compile(r"-?[0-9]+")


def load_config(config_path: str = "config.ini") -> GoodnessConfig:
    """
    加载配置文件，缺失的文件或选项使用默认值

    Args:
        config_path: 配置文件路径

    Returns:
        GoodnessConfig对象
    """
    parser = configparser.ConfigParser()
    parser.read(config_path, encoding="utf-8")
    defaults = GoodnessConfig()

    config = GoodnessConfig(
        preview_count=parser.getint("Output", "preview_count", fallback=defaults.preview_count),
        exponents_count=parser.getint("Output", "exponents_count", fallback=defaults.exponents_count),
        scan_multiplier=parser.getint("Oracle", "scan_multiplier", fallback=defaults.scan_multiplier),
        scan_padding=parser.getint("Oracle", "scan_padding", fallback=defaults.scan_padding),
        workers=parser.getint("Enumerate", "workers", fallback=defaults.workers),
        chunk_size=parser.getint("Enumerate", "chunk_size", fallback=defaults.chunk_size),
        cross_check=parser.getboolean("Decision", "cross_check", fallback=defaults.cross_check),
    )

    for name in ("preview_count", "exponents_count", "scan_multiplier", "workers", "chunk_size"):
        if getattr(config, name) < 1:
            raise ValueError(f"配置项 {name} 必须为正: {getattr(config, name)}")
    if config.scan_padding < 0:
        raise ValueError(f"配置项 scan_padding 不能为负: {config.scan_padding}")

    return config


def _integer(text: str) -> int:
    """十进制整数，可带前导 '-'"""
    if not _INTEGER.fullmatch(text):
        raise argparse.ArgumentTypeError(f"不是十进制整数: {text!r}")
    return int(text)


def _method(args) -> str:
    if args.structural:
        return "structural"
    if args.verify or args.cross_check:
        return "both"
    return "direct"


def _positive(name: str, value: int) -> None:
    if value < 1:
        raise DomainError(f"{name} 必须为正: {value}")


def _failure_text(verdict: GoodnessVerdict) -> str:
    step = verdict.failure_step.value
    if step == "step3_gcd_a":
        return f"第 3 步: gcd(ℓ, a) 含素因子 {verdict.offending_prime}"
    if step == "step3_gcd_b":
        return f"第 3 步: gcd(ℓ, b) 含素因子 {verdict.offending_prime}"
    return f"第 4 步: ℓ={verdict.context.ell} 不是好整数 ({verdict.coprime_verdict.reason.value})"


def _split_line(verdict_or_context) -> str:
    ctx = getattr(verdict_or_context, "context", verdict_or_context)
    return f"g={ctx.g} a={ctx.a} b={ctx.b} g_part={ctx.g_part} ell={ctx.ell} gamma={ctx.gamma}"


def _print_report(verdict: GoodnessVerdict, preview: Optional[List[int]]) -> None:
    ctx = verdict.context
    print("=" * 60)
    print(f"查询: A={ctx.A}, B={ctx.B}, L={ctx.L}")
    print("=" * 60)
    print(f"拆分: {_split_line(ctx)}")
    print(f"特殊情形: {classify_special_case(ctx).kind.value}")
    if verdict.good:
        prog = verdict.progression
        print("判定: ✓ 好整数")
        print(f"可行指数: {prog.describe()}")
        print(f"最小指数: {prog.k_min}")
        if preview:
            print(f"指数预览: {' '.join(map(str, preview))}")
    else:
        print(f"判定: ✗ 坏整数 ({_failure_text(verdict)})")
    print("=" * 60)


def cmd_check(args, config: GoodnessConfig) -> int:
    """判定单个 L"""
    enumerator = GoodIntegerEnumerator(config, method=_method(args))
    if args.verify:
        verdict, _ = enumerator.verify_modulus(args.A, args.B, args.L)
    else:
        verdict = enumerator.process_modulus(args.A, args.B, args.L)

    preview = None
    if verdict.good:
        preview = list(verdict.progression.iter_exponents(count=config.preview_count))

    if args.json:
        print(to_json(build_record(verdict, preview)))
    elif args.quiet:
        print(f"good k_min={verdict.progression.k_min}" if verdict.good else f"bad {verdict.failure_step.value}")
    else:
        _print_report(verdict, preview)

    return EXIT_GOOD if verdict.good else EXIT_BAD


def cmd_exponents(args, config: GoodnessConfig) -> int:
    """列出可行指数"""
    if args.count is not None:
        _positive("count", args.count)
    if args.limit is not None:
        _positive("limit", args.limit)

    verdict = decide(args.A, args.B, args.L, method=_method(args))
    if not verdict.good:
        print(f"L={args.L} 不是好整数: {_failure_text(verdict)}", file=sys.stderr)
        return EXIT_BAD

    if args.limit is not None:
        exponents = list(verdict.progression.iter_exponents(limit=args.limit))
    else:
        exponents = list(verdict.progression.iter_exponents(count=args.count or config.exponents_count))

    if args.verify:
        for k in exponents:
            if not divides_power_sum(args.A, args.B, args.L, k):
                raise InconsistencyError(f"K={k} 不满足 {args.L} | {args.A}^K + {args.B}^K")

    if args.json:
        print(to_json(build_record(verdict, exponents)))
    else:
        print(" ".join(map(str, exponents)))
    return EXIT_GOOD


def cmd_split(args, config: GoodnessConfig) -> int:
    """打印拆分结果"""
    if args.json:
        print(to_json(build_record(decide(args.A, args.B, args.L, method=_method(args)))))
    else:
        print(_split_line(build_context(args.A, args.B, args.L)))
    return EXIT_GOOD


def cmd_enumerate(args, config: GoodnessConfig) -> int:
    """流式列出 1..N 中的好整数"""
    _positive("N", args.N)
    if args.workers is not None:
        _positive("workers", args.workers)
        config.workers = args.workers

    enumerator = GoodIntegerEnumerator(config, method=_method(args), verbose=not args.quiet and args.progress)
    collected = [] if args.output else None

    for verdict in enumerator.iter_verdicts(args.A, args.B, args.N):
        if args.verify:
            enumerator.verify_modulus(args.A, args.B, verdict.context.L)
        if collected is not None:
            collected.append(verdict)
        if not verdict.good:
            continue
        if args.json:
            print(to_json(build_record(verdict)))
        else:
            print(verdict.context.L)

    if collected is not None:
        statistics = enumerator.calculate_statistics(collected)
        enumerator.save_results(collected, statistics, args.output)

    return EXIT_GOOD


def cmd_verify(args, config: GoodnessConfig) -> int:
    """用暴力扫描核对数列，一致时退出码为 0"""
    if args.bound is not None:
        _positive("bound", args.bound)

    enumerator = GoodIntegerEnumerator(config, method=_method(args))
    verdict, report = enumerator.verify_modulus(args.A, args.B, args.L, bound=args.bound)

    if args.json:
        print(to_json(build_record(verdict, list(report.admissible[:config.preview_count]))))
    elif not args.quiet:
        status = "好整数" if verdict.good else "坏整数"
        print(f"一致: {status}，1..{report.bound} 内共 {len(report.admissible)} 个可行指数")
    return EXIT_GOOD


def _common_options(suppress: bool) -> argparse.ArgumentParser:
    """公共选项。子命令上的副本不设默认值，避免覆盖写在子命令前面的选项"""
    common = argparse.ArgumentParser(add_help=False)
    flag = {"default": argparse.SUPPRESS} if suppress else {}
    common.add_argument("--json", action="store_true", help="输出单行 JSON 记录", **flag)
    common.add_argument("--verify", action="store_true", help="用暴力扫描与双判据交叉核对", **flag)
    common.add_argument("--quiet", action="store_true", help="只输出结果行", **flag)
    common.add_argument("--structural", action="store_true", help="第 4 步使用结构判据", **flag)
    common.add_argument(
        "--config", default=argparse.SUPPRESS if suppress else "config.ini", help="配置文件路径"
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    """构造命令行解析器，公共选项可以写在子命令前后"""
    common = _common_options(suppress=True)

    parser = argparse.ArgumentParser(
        prog="goodint",
        description="判定 L 是否整除某个 A^K + B^K",
        parents=[_common_options(suppress=False)],
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    check = subparsers.add_parser("check", parents=[common], help="判定单个 L")
    check.add_argument("A", type=_integer)
    check.add_argument("B", type=_integer)
    check.add_argument("L", type=_integer)
    check.set_defaults(handler=cmd_check)

    exponents = subparsers.add_parser("exponents", parents=[common], help="列出可行指数")
    exponents.add_argument("A", type=_integer)
    exponents.add_argument("B", type=_integer)
    exponents.add_argument("L", type=_integer)
    group = exponents.add_mutually_exclusive_group()
    group.add_argument("--count", type=_integer, help="输出前 n 个")
    group.add_argument("--limit", type=_integer, help="输出全部 ≤ M 的指数")
    exponents.set_defaults(handler=cmd_exponents)

    split = subparsers.add_parser("split", parents=[common], help="打印 L 的拆分")
    split.add_argument("A", type=_integer)
    split.add_argument("B", type=_integer)
    split.add_argument("L", type=_integer)
    split.set_defaults(handler=cmd_split)

    enumerate_ = subparsers.add_parser("enumerate", parents=[common], help="列出 1..N 中的好整数")
    enumerate_.add_argument("A", type=_integer)
    enumerate_.add_argument("B", type=_integer)
    enumerate_.add_argument("N", type=_integer)
    enumerate_.add_argument("--workers", type=_integer, help="并行进程数")
    enumerate_.add_argument("--output", help="保存结果到 .xlsx 或 .csv 文件")
    enumerate_.add_argument("--progress", action="store_true", help="在标准错误输出进度")
    enumerate_.set_defaults(handler=cmd_enumerate)

    verify = subparsers.add_parser("verify", parents=[common], help="用暴力扫描核对可行指数")
    verify.add_argument("A", type=_integer)
    verify.add_argument("B", type=_integer)
    verify.add_argument("L", type=_integer)
    verify.add_argument("--bound", type=_integer, help="扫描上界")
    verify.set_defaults(handler=cmd_verify)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """主函数"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    try:
        config = load_config(args.config)
    except (configparser.Error, ValueError) as e:
        print(f"配置错误: {e}", file=sys.stderr)
        return EXIT_USAGE
    args.cross_check = config.cross_check

    try:
        return args.handler(args, config)

    except InconsistencyError as e:
        print(f"内部不一致: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except DomainError as e:
        print(f"输入错误: {e}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as e:
        print(f"处理失败: {e}", file=sys.stderr)
        traceback.print_exc()
        return EXIT_INTERNAL


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
