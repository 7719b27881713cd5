# utils/logger.py - 日志系统

import logging
from datetime import datetime
from pathlib import Path
from typing import List
try:
    from config import LOGS_DIR, LOG_LEVEL, LOG_FORMAT
except ImportError:
    import sys
    project_root = Path(__file__).resolve().parents[1]
    if str(project_root) not in sys.path:
        sys.path.insert(0, str(project_root))
    from config import LOGS_DIR, LOG_LEVEL, LOG_FORMAT


def setup_logger(name: str, log_file: str = None) -> logging.Logger:
    """
    设置日志记录器

    Args:
        name: 日志记录器名称
        log_file: 日志文件名，相对 LOGS_DIR（可选）

    Returns:
        配置好的日志记录器
    """
    logger = logging.getLogger(name)
    logger.setLevel(getattr(logging, LOG_LEVEL.upper(), logging.INFO))

    # 清除已有的处理器
    logger.handlers.clear()
    logger.propagate = False

    formatter = logging.Formatter(LOG_FORMAT)

    # 控制台处理器（只显示WARNING及以上）
    console_handler = logging.StreamHandler()
    console_handler.setLevel(logging.WARNING)
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    if log_file:
        file_path = Path(log_file)
        if not file_path.is_absolute():
            file_path = Path(LOGS_DIR) / file_path
    else:
        today = datetime.now().strftime("%Y%m%d")
        file_path = Path(LOGS_DIR) / f"verifier_{today}.log"

    try:
        file_path.parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(file_path, encoding='utf-8')
    except OSError:
        # 只读目录下只保留控制台输出
        return logger
    file_handler.setLevel(logger.level)
    file_handler.setFormatter(formatter)
    logger.addHandler(file_handler)

    return logger


class SuiteLogger:
    """
    单个验证套件的运行日志，写入 suites/<suite>.log

    每行一条记录：START 为运行参数，FAIL 为失败的关系实例（关系、结点、模式、测试向量、两种判定），
    SUMMARY 为 pass/fail/excluded 计数。
    """

    def __init__(self, suite: str):
        self.suite = suite
        self.log_file = Path("suites") / f"{suite}.log"
        self.logger = setup_logger(f"suite_{suite}", str(self.log_file))

    def log_start(self, params: dict):
        """记录运行参数"""
        rendered = " ".join(f"{key}={value}" for key, value in sorted(params.items()))
        self.logger.info(f"START suite={self.suite} {rendered}")

    def log_failure(self, entry: dict):
        """记录一条失败的关系实例"""
        self.logger.warning(
            f"FAIL suite={self.suite} relation={entry['relation']} nodes={entry.get('nodes', [])} "
            f"modes={entry.get('modes', [])} vector={entry.get('vector', '')} "
            f"symbolic={entry.get('symbolic', '-')} numeric={entry.get('numeric', '-')}"
        )

    def log_report(self, report: dict) -> bool:
        """
        记录报告中的全部失败项与汇总计数

        Returns:
            是否没有失败项
        """
        for entry in report["results"]:
            if entry["status"] == "fail":
                self.log_failure(entry)
        summary = report["summary"]
        line = (f"SUMMARY suite={self.suite} pass={summary['pass']} "
                f"fail={summary['fail']} excluded={summary['excluded']}")
        if summary["fail"]:
            self.logger.error(line)
            return False
        self.logger.info(line)
        return True


class ErrorLogger:
    """未预期异常的日志，按日期写入 errors/errors_<日期>.log，附带命令与参数"""

    @staticmethod
    def log_error(command: str, error: Exception, argv: List[str] = None):
        today = datetime.now().strftime("%Y%m%d")
        logger = setup_logger(f"error_{command}", str(Path("errors") / f"errors_{today}.log"))
        logger.error(f"ERROR command={command} type={type(error).__name__} argv={' '.join(argv or [])}: {error}",
                     exc_info=True)
