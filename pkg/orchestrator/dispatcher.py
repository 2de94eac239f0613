"""
Verification Orchestrator（驗證指揮官）
把子命令對應到檢查清單，逐筆處理語料記錄並組裝 VerificationRecord。

流程：
1. 解析子命令與 --verify 清單
2. 依圖的大小決定取樣（Y 超過 SAMPLE_THRESHOLD 個頂點時只取前 SAMPLE_SIZE 對 / 個頂點）
3. 逐筆（或以 process pool 平行）執行檢查；輸出依語料序號排列
4. 彙整結束碼：任何 fail → 1，否則任何 budget → 3，否則 0
"""

import dataclasses
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from agents.base_check import BaseCheck, RunOptions
from agents.circumference_check import CircumferenceBoundCheck
from agents.girth_check import GirthControlCheck
from agents.lemma_check import LemmaCheck
from agents.proposition_check import PropositionCheck
from agents.tel_check import TelCatalogCheck, TelOracleCheck
from agents.theorem_check import TheoremCheck
from agents.tightness_check import TightnessCheck
from agents.triangle_check import TriangleIdentityCheck
from config.settings import Settings
from graphs.errors import UsageError
from harness.corpus import CorpusEntry, atlas_entries
from harness.instance import GraphInstance
from harness.records import (
    CorpusRef,
    GraphSummary,
    Predicates,
    RecordStatus,
    Verdict,
    VerificationRecord,
    WitnessDigest,
)

logger = logging.getLogger(__name__)

COMMANDS = ("check", "verify-proposition", "verify-theorem", "tightness-scan", "verify-lemma", "verify-tel")

COMMAND_CHECKS: Dict[str, List[str]] = {
    "verify-proposition": ["proposition"],
    "verify-theorem": ["theorem", "girth-control"],
    "tightness-scan": ["tightness"],
    "verify-lemma": ["lemma"],
    "verify-tel": ["tel-catalog"],
}

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def build_checks(settings: Settings) -> Dict[str, BaseCheck]:
    return {
        "proposition": PropositionCheck(settings),
        "theorem": TheoremCheck(settings),
        "triangle-identities": TriangleIdentityCheck(settings),
        "circumference-bound": CircumferenceBoundCheck(settings),
        "tel-oracle": TelOracleCheck(settings),
        "girth-control": GirthControlCheck(settings),
        "tightness": TightnessCheck(settings),
        "lemma": LemmaCheck(settings),
        "tel-catalog": TelCatalogCheck(settings),
    }


def resolve_checks(command: str, verify: Optional[Sequence[str]], settings: Settings) -> List[str]:
    """check 子命令接受 --verify 清單（"all" 代表所有逐圖檢查）；其他子命令固定"""
    if command not in COMMANDS:
        raise UsageError(f"unknown command: {command}")
    if command != "check":
        return list(COMMAND_CHECKS[command])
    available = settings.instance_checks()
    if not verify or "all" in verify:
        return available
    unknown = [name for name in verify if name not in available]
    if unknown:
        raise UsageError(f"unknown check(s): {', '.join(unknown)}; choose from {', '.join(available)}")
    return [name for name in available if name in verify]


def sampling_for(entry: CorpusEntry, options: RunOptions, settings: Settings) -> RunOptions:
    """大型語料圖預設只取前 SAMPLE_SIZE 對 / 個頂點；內建 fixtures 一律窮舉"""
    if entry.graph.n <= settings.SAMPLE_THRESHOLD:
        return options
    return dataclasses.replace(
        options,
        max_pairs=options.max_pairs if options.max_pairs is not None else settings.SAMPLE_SIZE,
        max_vertices=options.max_vertices if options.max_vertices is not None else settings.SAMPLE_SIZE,
    )


def verify_entry(entry: CorpusEntry, command: str, check_names: Sequence[str],
                 options: RunOptions, settings: Settings) -> VerificationRecord:
    """處理一筆語料記錄；純函式，可在 worker process 中執行"""
    instance = GraphInstance(entry)
    checks = build_checks(settings)
    record = VerificationRecord(
        schema_version=settings.SCHEMA_VERSION,
        command=command,
        corpus=CorpusRef(file=entry.file, ordinal=entry.ordinal),
        graph=GraphSummary(n=entry.graph.n, m=entry.graph.m, graph6=instance.graph6),
        predicates=Predicates(**instance.predicates()),
    )

    reason = None if command == "verify-tel" else instance.qualification()
    if reason:
        record.status = RecordStatus.SKIPPED.value
        record.skip_reason = reason
        for name in check_names:
            for key in checks[name].verdict_keys:
                record.verdicts[key] = Verdict.SKIPPED.value
        logger.info("[Orchestrator] %s skipped: %s", instance.label, reason)
        return record

    options = sampling_for(entry, options, settings)
    for name in check_names:
        outcome = checks[name].run(instance, options)
        for key, verdict in outcome.verdicts.items():
            record.verdicts[key] = Verdict(verdict).value
        record.details[name] = outcome.details
        for key, digest in outcome.witnesses.items():
            record.witnesses[key] = WitnessDigest(**digest)
        record.budget_exceeded = record.budget_exceeded or outcome.budget_exceeded
        record.timings[name] = round(outcome.elapsed, 3)
    return record


def verify_generated(command: str, options: RunOptions, settings: Settings) -> VerificationRecord:
    """不需要語料的命令（verify-lemma）"""
    check = build_checks(settings)["lemma"]
    outcome = check.run(None, options)
    return VerificationRecord(
        schema_version=settings.SCHEMA_VERSION,
        command=command,
        corpus=CorpusRef(file=f"<random seed={options.seed}>", ordinal=0),
        verdicts={k: Verdict(v).value for k, v in outcome.verdicts.items()},
        details={"lemma": outcome.details},
        budget_exceeded=outcome.budget_exceeded,
        timings={"lemma": round(outcome.elapsed, 3)},
    )


@dataclass
class RunSummary:
    command: str
    records: List[VerificationRecord] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        if any(r.failed for r in self.records):
            return EXIT_FAILURE
        if any(r.over_budget for r in self.records):
            return EXIT_BUDGET
        return EXIT_OK

    def verdict_counts(self) -> Dict[str, Dict[str, int]]:
        counts: Dict[str, Dict[str, int]] = {}
        for record in self.records:
            for key, verdict in record.verdicts.items():
                bucket = counts.setdefault(key, {})
                bucket[verdict] = bucket.get(verdict, 0) + 1
        return counts


class VerificationOrchestrator:
    """
    中央指揮：持有設定與檢查清單，把語料記錄分派給檢查。
    workers > 1 時以 process pool 平行處理，輸出順序仍依語料序號。
    """

    def __init__(self, settings: Optional[Settings] = None, workers: int = 1):
        self.settings = settings or Settings()
        self.workers = max(1, workers)
        self.dispatch_log: List[Dict[str, object]] = []

    def run(self, command: str, entries: Sequence[CorpusEntry], options: RunOptions,
            verify: Optional[Sequence[str]] = None) -> RunSummary:
        check_names = resolve_checks(command, verify, self.settings)
        logger.info("[Orchestrator] %s → checks: %s", command, ", ".join(check_names))
        summary = RunSummary(command=command)

        if command == "verify-lemma":
            if options.count > 0 or options.exhaustive_n > 0:
                summary.records.append(verify_generated(command, options, self.settings))
            self._log(summary)
            return summary

        if command == "verify-tel":
            entries = atlas_entries(options.tel_max_n, self.settings.TEL_ATLAS_LIMIT) + list(entries)

        if self.workers > 1 and len(entries) > 1:
            n = len(entries)
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                summary.records = list(pool.map(
                    verify_entry, entries, [command] * n, [check_names] * n,
                    [options] * n, [self.settings] * n,
                ))
        else:
            summary.records = [
                verify_entry(entry, command, check_names, options, self.settings)
                for entry in entries
            ]
        self._log(summary)
        return summary

    def _log(self, summary: RunSummary):
        self.dispatch_log.append({
            "command": summary.command,
            "records": len(summary.records),
            "exit_code": summary.exit_code,
        })
        logger.info("[Orchestrator] %s finished: %d records, exit %d",
                    summary.command, len(summary.records), summary.exit_code)
