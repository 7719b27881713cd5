# utils/report_writer.py - 报告输出（确定性 JSON 与文本摘要）

import json
from pathlib import Path
from typing import List

try:
    from config import REPORTS_DIR
except ImportError:
    import sys
    project_root = Path(__file__).resolve().parents[1]
    if str(project_root) not in sys.path:
        sys.path.insert(0, str(project_root))
    from config import REPORTS_DIR


def default_report_path(name: str) -> Path:
    return Path(REPORTS_DIR) / f"{name}.json"


def dumps_report(report: dict) -> str:
    """同一报告总是得到同一字节序列（键排序、无时间戳）"""
    return json.dumps(report, ensure_ascii=False, indent=2, sort_keys=True) + "\n"


def write_report(report: dict, path=None) -> dict:
    """
    写出 JSON 报告

    Returns:
        {"success": bool, "path": str} 或 {"success": False, "error": str}
    """
    target = Path(path) if path else default_report_path(report.get("suite", "report"))
    try:
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(dumps_report(report), encoding="utf-8")
    except OSError as e:
        return {"success": False, "error": f"无法写入报告 {target}: {e}"}
    return {"success": True, "path": str(target)}


def summary_lines(report: dict, max_failures: int = 10) -> List[str]:
    """人类可读的摘要：参数、计数与前几条失败"""
    summary = report["summary"]
    params = ", ".join(f"{k}={v}" for k, v in sorted(report["params"].items()) if v is not None)
    lines = [
        f"套件 {report['suite']} ({params})",
        f"通过 {summary['pass']}，失败 {summary['fail']}，排除 {summary['excluded']}",
    ]
    failures = [e for e in report["results"] if e["status"] == "fail"]
    for entry in failures[:max_failures]:
        lines.append(f"  ✗ {entry['relation']} 结点={entry.get('nodes')} 模式={entry.get('modes')} "
                     f"向量={entry.get('vector')}")
    if len(failures) > max_failures:
        lines.append(f"  ... 另有 {len(failures) - max_failures} 条失败")
    return lines
