# tests/test_logger.py - 日志文件位置与套件日志内容

from pathlib import Path

from config import LOGS_DIR
from utils.logger import ErrorLogger, SuiteLogger, setup_logger


def test_setup_logger_is_idempotent():
    first = setup_logger("verifier.test")
    second = setup_logger("verifier.test")
    assert first is second
    assert len(second.handlers) == 2
    assert not second.propagate


def test_suite_logger_records_failures_and_counts():
    suite_log = SuiteLogger("unit")
    suite_log.log_start({"ell": 1, "parity": "+++-"})
    report = {
        "results": [
            {"relation": "CK", "nodes": [1, 2], "modes": [0], "vector": "1⊗v(3)",
             "status": "fail", "symbolic": "fail", "numeric": "fail"},
            {"relation": "KK1", "nodes": [0, 1], "modes": [0, 0], "vector": "1⊗v(3)", "status": "pass"},
        ],
        "summary": {"pass": 1, "fail": 1, "excluded": 0},
    }
    assert suite_log.log_report(report) is False
    text = (Path(LOGS_DIR) / "suites" / "unit.log").read_text(encoding="utf-8")
    assert "START suite=unit ell=1 parity=+++-" in text
    assert "FAIL suite=unit relation=CK nodes=[1, 2] modes=[0]" in text
    assert "relation=KK1" not in text
    assert "SUMMARY suite=unit pass=1 fail=1 excluded=0" in text


def test_suite_logger_clean_report():
    suite_log = SuiteLogger("unit_clean")
    report = {"results": [], "summary": {"pass": 0, "fail": 0, "excluded": 2}}
    assert suite_log.log_report(report) is True


def test_error_logger_records_command_and_type():
    try:
        raise ValueError("boom")
    except ValueError as e:
        ErrorLogger.log_error("unit", e, ["verify", "daha"])
    files = list((Path(LOGS_DIR) / "errors").glob("errors_*.log"))
    assert files
    text = "".join(f.read_text(encoding="utf-8") for f in files)
    assert "command=unit type=ValueError argv=verify daha" in text
