#!/usr/bin/env python3
# main.py - 命令行入口（verify / dump / bench）

import argparse
import json
import os
import sys
from typing import Dict, List, Optional

# 添加项目根目录到Python路径
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from config import (
    BATTERY_CHOICES, EXIT_FAILURES, EXIT_OK, EXIT_USAGE, MIN_TOROIDAL_KAPPA, OUTPUT_FORMATS
)
from core.operator_dump import DUMP_OPS, dump_operator
from core.verify import SUITES, SuiteOptions, VerificationRunner
from utils.logger import ErrorLogger, setup_logger
from utils.report_writer import default_report_path, dumps_report, summary_lines, write_report
from utils.run_config import ZETA_CHOICES, ConfigError, RunConfig, load_run_config, require_distinct_ranks

logger = setup_logger("verifier")

_CONFIG_FLAGS = ("m", "n", "ell", "modes", "parity", "mode", "q0", "d0", "seed", "jobs", "out",
                 "serre_modes", "battery", "zeta")


def _is_integer(text) -> bool:
    try:
        int(text)
    except (TypeError, ValueError):
        return False
    return True


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="verifier",
        description="双仿射 Hecke 代数与环面超代数 Schur-Weyl 函子的精确验证工具",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=int, help="gl(m|n) 的 m")
    common.add_argument("--n", type=int, help="gl(m|n) 的 n")
    common.add_argument("--ell", type=int, help="张量次数 ℓ")
    common.add_argument("--modes", type=int, help="模式截断界 R")
    common.add_argument("--parity", help="奇偶序列：standard 或 '+++-' 形式")
    common.add_argument("--mode", help="比较方式 symbolic/numeric/both（dump 中为整数时表示模式 r）")
    common.add_argument("--q0", help="数值特化点 q（有理数）")
    common.add_argument("--d0", help="数值特化点 d（有理数）")
    common.add_argument("--seed", type=int, help="随机向量组种子")
    common.add_argument("--jobs", type=int, help="并行线程数")
    common.add_argument("--out", help="报告输出路径")
    common.add_argument("--config", help="key = value 形式的配置文件")
    common.add_argument("--serre-modes", dest="serre_modes", type=int, help="Serre 关系的模式界")
    common.add_argument("--battery", choices=BATTERY_CHOICES, help="测试向量组")
    common.add_argument("--zeta", choices=ZETA_CHOICES, help="DAHA 套件的 ζ：derived=q₁^{n-m}，formal=d")

    sub = parser.add_subparsers(dest="command", required=True)
    verify = sub.add_parser("verify", parents=[common], help="运行验证套件")
    verify.add_argument("suite", choices=SUITES)

    dump = sub.add_parser("dump", parents=[common], help="导出算子作用表")
    dump.add_argument("--op", required=True, choices=DUMP_OPS)
    dump.add_argument("--node", type=int, default=0)
    dump.add_argument("--mode-index", dest="mode_index", type=int, default=0, help="流算子的模式 r")
    dump.add_argument("--flavor", choices=("toroidal", "affine", "vertical", "horizontal"))
    dump.add_argument("--plain", action="store_true", help="在 V(ξ)^{⊗ℓ} 上导出稀疏矩阵")
    dump.add_argument("--r", type=int, help="P_r 的 r")
    dump.add_argument("--i", type=int, help="Q_{i,j} 的 i")
    dump.add_argument("--j", type=int, help="Q_{i,j} 的 j")
    dump.add_argument("--word", help="DAHA 生成元字，如 'T1 X2^-1 Q'")

    bench = sub.add_parser("bench", parents=[common], help="运行套件并计时")
    bench.add_argument("--suites", nargs="+", choices=SUITES, default=["daha", "finite", "affine"])
    return parser


class VerifierApp:
    """解析参数、运行子命令、输出报告与摘要"""

    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.config: Optional[RunConfig] = None

    def load_config(self) -> RunConfig:
        flags = {name: getattr(self.args, name, None) for name in _CONFIG_FLAGS}
        if self.args.command == "dump" and _is_integer(flags["mode"]):
            self.args.mode_index = int(flags.pop("mode"))
        self.config = load_run_config(flags, getattr(self.args, "config", None))
        for message in self.config.warnings:
            print(f"{OUTPUT_FORMATS['warning']} {message}")
        return self.config

    def runner(self) -> VerificationRunner:
        c = self.config
        return VerificationRunner(SuiteOptions(
            mode=c.mode, q0=c.q0, d0=c.d0, jobs=c.jobs, seed=c.seed,
            battery=c.battery, serre_modes=c.serre_modes,
        ))

    def run_suite(self, suite: str) -> dict:
        c = self.config
        require_distinct_ranks(c, suite)
        pd = c.parity_data()
        runner = self.runner()
        if suite == "toroidal":
            if c.kappa < MIN_TOROIDAL_KAPPA:
                raise ConfigError(f"κ ≥ {MIN_TOROIDAL_KAPPA} required (κ={c.kappa})")
            return runner.run_toroidal_suite(pd, c.ell, c.modes)
        if suite == "affine":
            return runner.run_affine_suite(pd, c.ell)
        if suite == "finite":
            return runner.run_finite_suite(pd, c.ell)
        if suite == "daha":
            return runner.run_daha_suite(c.ell, c.m, c.n, c.zeta)
        return runner.run_rotation_suite(pd, c.ell, c.modes)

    def emit(self, report: dict, path) -> int:
        result = write_report(report, path)
        if not result["success"]:
            print(f"{OUTPUT_FORMATS['error']} {result['error']}")
            return EXIT_FAILURES
        for line in summary_lines(report):
            print(f"{OUTPUT_FORMATS['suite']} {line}")
        print(f"{OUTPUT_FORMATS['file']} 报告已写入: {result['path']}")
        if report["summary"]["fail"]:
            print(f"{OUTPUT_FORMATS['error']} 存在 {report['summary']['fail']} 条失败")
            return EXIT_FAILURES
        print(f"{OUTPUT_FORMATS['success']} 全部通过")
        return EXIT_OK

    def cmd_verify(self) -> int:
        suite = self.args.suite
        print(f"{OUTPUT_FORMATS['action']} 运行 {suite} 套件")
        logger.info(f"verify {suite}: {self.config.to_dict()}")
        report = self.run_suite(suite)
        return self.emit(report, self.config.out or default_report_path(suite))

    def cmd_dump(self) -> int:
        a = self.args
        params: List[int] = []
        if a.op == "P":
            if a.r is None:
                raise ConfigError("dump --op P 需要 --r")
            params = [a.r]
            if a.ell is None and self.config.ell <= a.r:
                # 未指定 ℓ 时取能容纳 P_r 的最小 ℓ
                self.config.ell = a.r + 1
        elif a.op == "Qij":
            if a.i is None or a.j is None:
                raise ConfigError("dump --op Qij 需要 --i 与 --j")
            params = [a.i, a.j]
        try:
            table = dump_operator(self.config, a.op, a.node, a.mode_index, a.flavor, a.plain, params, a.word)
        except (ValueError, IndexError) as e:
            raise ConfigError(str(e))
        text = dumps_report(table)
        if self.config.out:
            with open(self.config.out, "w", encoding="utf-8") as f:
                f.write(text)
            print(f"{OUTPUT_FORMATS['file']} 作用表已写入: {self.config.out}")
        else:
            sys.stdout.write(text)
        return EXIT_OK

    def cmd_bench(self) -> int:
        runner_suites: Dict[str, object] = {name: (lambda name=name: self.run_suite(name)) for name in self.args.suites}
        timings = self.runner().bench(runner_suites)
        status = EXIT_OK
        for item in timings:
            print(f"{OUTPUT_FORMATS['bench']} {item['suite']}: {item['seconds']} s  {item['summary']}")
            if item["summary"]["fail"]:
                status = EXIT_FAILURES
        if self.config.out:
            with open(self.config.out, "w", encoding="utf-8") as f:
                json.dump(timings, f, ensure_ascii=False, indent=2, sort_keys=True)
        return status

    def run(self) -> int:
        try:
            self.load_config()
            if self.args.command == "verify":
                return self.cmd_verify()
            if self.args.command == "dump":
                return self.cmd_dump()
            return self.cmd_bench()
        except ConfigError as e:
            print(f"{OUTPUT_FORMATS['error']} {e}")
            return EXIT_USAGE
        except ValueError as e:
            # 库函数的参数检查
            print(f"{OUTPUT_FORMATS['error']} {e}")
            return EXIT_USAGE
        except Exception as e:
            ErrorLogger.log_error(self.args.command, e, sys.argv[1:])
            print(f"{OUTPUT_FORMATS['error']} 运行失败: {e}")
            return EXIT_FAILURES


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    return VerifierApp(args).run()


if __name__ == "__main__":
    sys.exit(main())
