"""
Cycle Spectrum Verifier 主入口
子命令：check | verify-proposition | verify-theorem | tightness-scan | verify-lemma | verify-tel
報表（JSON-lines）寫到 --json 或 stdout；日誌與摘要寫到 stderr。
"""

import argparse
import logging
import os
import sys
from typing import List, Optional

# 確保專案根目錄在 Python path 中
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from agents.base_check import RunOptions
from config.settings import Settings
from dashboard.summary import RunDashboard
from graphs.errors import MalformedEncoding, UsageError
from harness.corpus import FORMATS, load_corpus
from harness.report_writer import write_csv, write_json_lines
from orchestrator.dispatcher import EXIT_USAGE, VerificationOrchestrator


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cycle-spectrum",
        description="驗證 cyclically 4-edge-connected cubic 平面圖及其 line graph 的環長性質",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", action="append", default=[], metavar="PATH",
                        help="語料檔案（可重複）；省略時使用內建 fixtures")
    common.add_argument("--format", choices=FORMATS, default="auto")
    common.add_argument("--budget", type=int, help="每次搜尋的節點展開上限")
    common.add_argument("--seed", type=int)
    common.add_argument("--max-pairs", type=int, dest="max_pairs")
    common.add_argument("--max-vertices", type=int, dest="max_vertices")
    common.add_argument("--json", metavar="PATH", help="JSON-lines 報表路徑（預設 stdout）")
    common.add_argument("--csv", metavar="PATH", help="CSV 摘要路徑")
    common.add_argument("--no-timings", action="store_true", help="報表不含 timings 欄位")
    common.add_argument("--workers", type=int)
    common.add_argument("--verbose", action="store_true")
    common.add_argument("--quiet", action="store_true")

    check = sub.add_parser("check", parents=[common], help="逐圖執行所選的檢查")
    check.add_argument("--verify", default="all",
                       help="以逗號分隔的檢查名稱，或 all")
    check.add_argument("--mode", choices=("constructive", "oracle"), default="constructive")

    sub.add_parser("verify-proposition", parents=[common], help="H 的區間環長")
    theorem = sub.add_parser("verify-theorem", parents=[common], help="L(Y) - v 的環長")
    theorem.add_argument("--mode", choices=("constructive", "oracle"), default="constructive")
    sub.add_parser("tightness-scan", parents=[common], help="m(k)/k 掃描")

    lemma = sub.add_parser("verify-lemma", parents=[common], help="無環生成子有向圖")
    lemma.add_argument("--count", type=int)
    lemma.add_argument("--max-n", type=int, dest="max_n")
    lemma.add_argument("--exhaustive", type=int, dest="exhaustive_n", metavar="N")

    tel = sub.add_parser("verify-tel", parents=[common], help="Three Edge Lemma 目錄")
    tel.add_argument("--max-n", type=int, dest="tel_max_n")
    return parser


def configure_logging(settings: Settings, verbose: bool, quiet: bool):
    level = logging.DEBUG if verbose else logging.WARNING if quiet else settings.LOG_LEVEL
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


def main(argv: Optional[List[str]] = None) -> int:
    """主程式入口；回傳結束碼"""
    parser = build_parser()
    args = parser.parse_args(argv)
    settings = Settings()
    configure_logging(settings, args.verbose, args.quiet)

    exhaustive_n = getattr(args, "exhaustive_n", None)
    if getattr(args, "count", None) == 0 and exhaustive_n is None:
        # 只給 --count 0 時不做窮舉，報表為空
        exhaustive_n = 0
    options = RunOptions.from_settings(
        settings,
        mode=getattr(args, "mode", None),
        budget=args.budget,
        seed=args.seed,
        max_pairs=args.max_pairs,
        max_vertices=args.max_vertices,
        count=getattr(args, "count", None),
        max_n=getattr(args, "max_n", None),
        exhaustive_n=exhaustive_n,
        tel_max_n=getattr(args, "tel_max_n", None),
    )
    verify = [v.strip() for v in args.verify.split(",") if v.strip()] if args.command == "check" else None

    try:
        entries = [] if args.command == "verify-lemma" else load_corpus(args.input, args.format)
        orchestrator = VerificationOrchestrator(settings, workers=args.workers or settings.WORKERS)
        summary = orchestrator.run(args.command, entries, options, verify)
        write_json_lines(summary.records, args.json, include_timings=not args.no_timings)
        if args.csv:
            write_csv(summary.records, args.csv)
    except (OSError, MalformedEncoding, UsageError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    if not args.quiet:
        print(RunDashboard(summary).render(), file=sys.stderr)
    return summary.exit_code


if __name__ == "__main__":
    sys.exit(main())
