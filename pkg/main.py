#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
专家先验汇聚实验室

命令:
    evaluate <file>                         运行情景文件中的全部查询
    check <file> --axiom <id|all>           对情景中的规则运行随机公理检验
    demo <id>                               运行内置示例

退出码: 0 成功且检验全部通过；1 检验被违反或示例不一致；2 情景解析/校验/查询错误；3 检验无法在该情景上求值（全部试验被跳过或不适用）；64 用法错误。
"""

import argparse
import logging
import sys
from typing import List, Optional

from checks import AXIOM_IDS
from core.errors import BracketFailure, PoolingError
from core.tolerance import use_tolerance
from pooling_lab import ALL_AXIOMS, PoolingLab
from utils.demos import DEMOS
from utils.scenario_manager import DemoMismatch, ScenarioError

EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_INPUT = 2
EXIT_INAPPLICABLE = 3
EXIT_USAGE = 64


class LabArgumentParser(argparse.ArgumentParser):
    """用法错误以 64 退出"""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return value


def build_parser() -> LabArgumentParser:
    common = LabArgumentParser(add_help=False)
    common.add_argument("--machine", action="store_true", help="输出 section<TAB>key<TAB>value 行")
    common.add_argument("--eps-value", type=_positive_float, default=None, help="覆盖偏好比较容差")
    common.add_argument("--config", type=str, default=None, help="INI 配置文件路径")

    parser = LabArgumentParser(prog="pooling-lab", description="专家先验汇聚与公理检验")
    commands = parser.add_subparsers(dest="command", parser_class=LabArgumentParser)
    commands.required = True

    evaluate = commands.add_parser("evaluate", parents=[common], help="运行情景文件中的查询")
    evaluate.add_argument("file")
    evaluate.add_argument("--seed", type=int, default=None)

    check = commands.add_parser("check", parents=[common], help="运行随机公理检验")
    check.add_argument("file")
    check.add_argument("--axiom", required=True, choices=list(AXIOM_IDS) + [ALL_AXIOMS])
    check.add_argument("--trials", type=_positive_int, default=None)
    check.add_argument("--seed", type=int, default=None)

    demo = commands.add_parser("demo", parents=[common], help="运行内置示例")
    demo.add_argument("demo_id", choices=list(DEMOS))
    return parser


def cli_main(argv: Optional[List[str]] = None) -> int:
    """命令行入口，返回退出码"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if isinstance(e.code, int) else EXIT_USAGE

    try:
        lab = PoolingLab(config_source=args.config, eps_value=args.eps_value)
    except ValueError as e:
        print(f"pooling-lab: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=lab.config_manager.get_log_level(), stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")

    previous = use_tolerance(lab.tolerance)
    try:
        if args.command == "evaluate":
            result = lab.evaluate(args.file, machine=args.machine, seed=args.seed)
        elif args.command == "check":
            result = lab.check(args.file, args.axiom, trials=args.trials, seed=args.seed, machine=args.machine)
        else:
            result = lab.demo(args.demo_id, machine=args.machine)
    except DemoMismatch as e:
        print(f"pooling-lab: {e}", file=sys.stderr)
        return EXIT_VIOLATED
    except (ScenarioError, PoolingError, BracketFailure, ValueError) as e:
        print(f"pooling-lab: {e}", file=sys.stderr)
        return EXIT_INPUT
    finally:
        use_tolerance(previous)

    sys.stdout.write(result.text)
    if result.violated:
        return EXIT_VIOLATED
    return EXIT_INAPPLICABLE if result.inapplicable else EXIT_OK


if __name__ == "__main__":
    sys.exit(cli_main())
