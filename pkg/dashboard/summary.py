"""
執行摘要儀表板
把一次執行的記錄彙整成 CLI 文字版報告（寫到 stderr，不混入 JSON-lines）。
"""

from typing import Dict, List

from orchestrator.dispatcher import RunSummary

VERDICT_ORDER = ("pass", "fail", "budget", "skipped")


class RunDashboard:
    """
    單次執行的彙整。

    指標：
    - 記錄數、已檢查 / 略過數
    - 每個 verdict 的 pass / fail / budget / skipped 計數
    - 最慢的檢查（依 timings 加總）
    """

    def __init__(self, summary: RunSummary):
        self.summary = summary

    def collect_metrics(self) -> Dict[str, object]:
        records = self.summary.records
        timings: Dict[str, float] = {}
        for r in records:
            for name, seconds in r.timings.items():
                timings[name] = timings.get(name, 0.0) + seconds
        return {
            "records": len(records),
            "checked": sum(1 for r in records if r.status == "checked"),
            "skipped": sum(1 for r in records if r.status == "skipped"),
            "verdicts": self.summary.verdict_counts(),
            "timings": timings,
            "exit_code": self.summary.exit_code,
        }

    def render(self) -> str:
        m = self.collect_metrics()
        lines: List[str] = [
            "",
            "╔═══════════════════════════════════════════════════════════╗",
            f"  {self.summary.command}: {m['records']} records "
            f"({m['checked']} checked, {m['skipped']} skipped)",
            "╠═══════════════════════════════════════════════════════════╣",
        ]
        for key, counts in m["verdicts"].items():
            cells = "  ".join(f"{v}={counts[v]}" for v in VERDICT_ORDER if counts.get(v))
            lines.append(f"  {key:<22} {cells}")
        if m["timings"]:
            slowest = max(m["timings"], key=m["timings"].get)
            lines.append(f"  slowest check: {slowest} ({m['timings'][slowest]:.2f}s)")
        lines.append(f"  exit code: {m['exit_code']}")
        lines.append("╚═══════════════════════════════════════════════════════════╝")
        return "\n".join(lines)
