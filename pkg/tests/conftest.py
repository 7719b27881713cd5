# tests/conftest.py - 公共夹具

import logging
import os
import sys
import tempfile
from contextlib import contextmanager
from pathlib import Path

# 日志与报告写到临时目录，需在导入 config 之前设置
_SCRATCH = tempfile.mkdtemp(prefix="swd_tests_")
os.environ.setdefault("SWD_LOGS_DIR", os.path.join(_SCRATCH, "logs"))
os.environ.setdefault("SWD_REPORTS_DIR", os.path.join(_SCRATCH, "reports"))

project_root = Path(__file__).resolve().parents[1]
if str(project_root) not in sys.path:
    sys.path.insert(0, str(project_root))

import pytest

from modules.superdata import standard_parity
from modules.toroidal import FunctorSpace


@pytest.fixture
def std31():
    return standard_parity(3, 1)


@pytest.fixture
def std22():
    return standard_parity(2, 2)


@pytest.fixture(scope="module")
def space31():
    """(m, n) = (3, 1)，ℓ = 1"""
    return FunctorSpace(3, 1, 1)


@pytest.fixture(scope="module")
def space31_2():
    """(m, n) = (3, 1)，ℓ = 2"""
    return FunctorSpace(3, 1, 2)


def failures(results):
    """返回全部失败项，便于断言时打印"""
    return [entry for entry in results if entry["status"] != "pass"]


class _Collector(logging.Handler):
    def __init__(self):
        super().__init__(logging.DEBUG)
        self.messages = []

    def emit(self, record):
        self.messages.append(record.getMessage())


@contextmanager
def debug_messages(name):
    """临时把 name 日志记录器调到 DEBUG，收集期间的消息文本"""
    log = logging.getLogger(name)
    collector = _Collector()
    level = log.level
    log.setLevel(logging.DEBUG)
    log.addHandler(collector)
    try:
        yield collector.messages
    finally:
        log.removeHandler(collector)
        log.setLevel(level)
