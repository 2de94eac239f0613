"""
報表輸出
JSON-lines（每筆記錄一行）與 CSV 摘要（每筆記錄一列，每個 verdict 一欄）。
"""

import csv
import io
import sys
from typing import IO, Iterable, List, Optional, Sequence

from harness.records import VerificationRecord

CSV_BASE_COLUMNS = ["file", "ordinal", "n", "m", "status", "skip_reason"]


def render_json_lines(records: Iterable[VerificationRecord], include_timings: bool = True) -> str:
    return "".join(r.to_json_line(include_timings) + "\n" for r in records)


def write_json_lines(records: Sequence[VerificationRecord], path: Optional[str] = None,
                     include_timings: bool = True, stream: Optional[IO[str]] = None):
    """path 為 None 或 "-" 時寫到 stream（預設 stdout）"""
    text = render_json_lines(records, include_timings)
    if path is None or path == "-":
        (stream or sys.stdout).write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)


def verdict_columns(records: Iterable[VerificationRecord]) -> List[str]:
    """依第一次出現的順序"""
    columns: List[str] = []
    for record in records:
        for key in record.verdicts:
            if key not in columns:
                columns.append(key)
    return columns


def render_csv(records: Sequence[VerificationRecord]) -> str:
    verdicts = verdict_columns(records)
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_BASE_COLUMNS + verdicts + ["budget_exceeded"])
    for r in records:
        row = [
            r.corpus.file,
            r.corpus.ordinal,
            r.graph.n if r.graph else "",
            r.graph.m if r.graph else "",
            r.status,
            r.skip_reason or "",
        ]
        row.extend(r.verdicts.get(key, "") for key in verdicts)
        row.append(str(r.budget_exceeded).lower())
        writer.writerow(row)
    return out.getvalue()


def write_csv(records: Sequence[VerificationRecord], path: str):
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(render_csv(records))
