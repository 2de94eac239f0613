"""Orchestrator 與 CLI 主入口測試"""
import json
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import pytest

from agents.base_check import RunOptions
from config.settings import Settings
from dashboard.summary import RunDashboard
from graphs.errors import UsageError
from harness.corpus import CorpusEntry, fixture_entries
from harness.fixtures import cube, cycle_graph, k4, prism
from harness.records import CorpusRef, VerificationRecord
from main import main
from orchestrator.dispatcher import (
    EXIT_BUDGET,
    EXIT_FAILURE,
    EXIT_OK,
    EXIT_USAGE,
    RunSummary,
    VerificationOrchestrator,
    resolve_checks,
    sampling_for,
    verify_entry,
)
from protocols.graph6 import write_graph6


def record(verdicts, budget_exceeded=False):
    return VerificationRecord(command="check", corpus=CorpusRef(file="t", ordinal=0),
                              verdicts=verdicts, budget_exceeded=budget_exceeded)


def write_corpus(tmp_path, name, *graphs):
    path = tmp_path / name
    path.write_text("".join(write_graph6(g) + "\n" for g in graphs))
    return str(path)


class TestResolveChecks:
    def setup_method(self):
        self.settings = Settings()

    def test_all_instance_checks(self):
        names = resolve_checks("check", None, self.settings)
        assert "lemma" not in names and "tel-catalog" not in names
        assert names == self.settings.instance_checks()
        assert resolve_checks("check", ["all"], self.settings) == names

    def test_subset_keeps_registry_order(self):
        assert resolve_checks("check", ["tightness", "theorem"], self.settings) == ["theorem", "tightness"]

    def test_fixed_commands(self):
        assert resolve_checks("verify-theorem", ["tightness"], self.settings) == ["theorem", "girth-control"]
        assert resolve_checks("verify-lemma", None, self.settings) == ["lemma"]

    def test_unknown_check(self):
        with pytest.raises(UsageError):
            resolve_checks("check", ["hamiltonicity"], self.settings)

    def test_unknown_command(self):
        with pytest.raises(ValueError):
            resolve_checks("verify-everything", None, self.settings)


class TestSampling:
    def test_small_graph_unchanged(self):
        options = RunOptions()
        entry = fixture_entries()[2]
        assert sampling_for(entry, options, Settings()) is options

    def test_large_graph_sampled(self):
        entry = CorpusEntry(file="t", ordinal=0, graph=cycle_graph(24))
        sampled = sampling_for(entry, RunOptions(), Settings())
        assert sampled.max_pairs == 4 and sampled.max_vertices == 4

    def test_explicit_limits_win(self):
        entry = CorpusEntry(file="t", ordinal=0, graph=cycle_graph(24))
        sampled = sampling_for(entry, RunOptions(max_pairs=9), Settings())
        assert sampled.max_pairs == 9 and sampled.max_vertices == 4


class TestVerifyEntry:
    def test_unqualified_graph_is_skipped(self):
        entry = CorpusEntry(file="p.g6", ordinal=3, graph=prism())
        rec = verify_entry(entry, "check", ["theorem", "tightness"], RunOptions(), Settings())
        assert rec.status == "skipped"
        assert rec.skip_reason == "not cyclically 4-edge-connected"
        assert rec.verdicts == {"theorem": "skipped", "lambda-bound": "skipped", "tightness": "skipped"}
        assert rec.corpus.ordinal == 3
        assert rec.predicates.cyclically_4ec is False

    def test_cube_record(self):
        entry = fixture_entries()[1]
        rec = verify_entry(entry, "check", ["circumference-bound"], RunOptions(), Settings())
        assert rec.status == "checked"
        assert rec.verdicts == {"circumference-bound": "pass"}
        assert rec.graph.n == 8 and rec.graph.m == 12
        assert rec.witnesses["circumference"].count == 12
        assert "circumference-bound" in rec.timings


class TestRunSummary:
    def test_exit_code_precedence(self):
        assert RunSummary("check", [record({"a": "pass"})]).exit_code == EXIT_OK
        assert RunSummary("check", [record({"a": "budget"}), record({"a": "pass"})]).exit_code == EXIT_BUDGET
        assert RunSummary("check", [record({"a": "budget"}), record({"a": "fail"})]).exit_code == EXIT_FAILURE
        assert RunSummary("check", []).exit_code == EXIT_OK

    def test_verdict_counts(self):
        summary = RunSummary("check", [record({"a": "pass", "b": "skipped"}), record({"a": "pass"})])
        assert summary.verdict_counts() == {"a": {"pass": 2}, "b": {"skipped": 1}}

    def test_dashboard(self):
        summary = RunSummary("check", [record({"a": "pass"}), record({"a": "fail"})])
        text = RunDashboard(summary).render()
        assert "2 records" in text
        assert "pass=1  fail=1" in text
        assert "exit code: 1" in text


class TestOrchestrator:
    def setup_method(self):
        self.orchestrator = VerificationOrchestrator(Settings())

    def test_fixtures_in_order(self):
        summary = self.orchestrator.run("check", fixture_entries(), RunOptions(), ["circumference-bound"])
        assert [r.corpus.ordinal for r in summary.records] == [0, 1, 2]
        assert summary.records[0].verdicts == {"circumference-bound": "skipped"}
        assert summary.records[1].verdicts == {"circumference-bound": "pass"}
        assert summary.exit_code == EXIT_OK
        assert self.orchestrator.dispatch_log[-1] == {"command": "check", "records": 3, "exit_code": 0}

    def test_verify_lemma_needs_no_corpus(self):
        options = RunOptions(count=30, max_n=4, exhaustive_n=2)
        summary = self.orchestrator.run("verify-lemma", [], options)
        assert len(summary.records) == 1
        assert summary.records[0].verdicts == {"lemma": "pass"}
        assert summary.records[0].corpus.file == "<random seed=1>"

    def test_verify_lemma_nothing_generated(self):
        summary = self.orchestrator.run("verify-lemma", [], RunOptions(count=0, exhaustive_n=0))
        assert summary.records == []
        assert summary.exit_code == EXIT_OK

    def test_verify_tel_adds_atlas(self):
        entries = [CorpusEntry(file="k4.g6", ordinal=0, graph=k4().graph)]
        summary = self.orchestrator.run("verify-tel", entries, RunOptions(tel_max_n=4))
        assert len(summary.records) > 1
        assert summary.records[-1].corpus.file == "k4.g6"
        assert summary.exit_code == EXIT_OK


class TestMain:
    def test_prism_skipped(self, tmp_path):
        corpus = write_corpus(tmp_path, "prism.g6", prism())
        out = tmp_path / "report.jsonl"
        code = main(["check", "--input", corpus, "--json", str(out), "--quiet"])
        assert code == EXIT_OK
        data = json.loads(out.read_text())
        assert data["status"] == "skipped"
        assert data["skip_reason"] == "not cyclically 4-edge-connected"

    def test_empty_corpus(self, tmp_path):
        corpus = tmp_path / "empty.g6"
        corpus.write_bytes(b"")
        out = tmp_path / "report.jsonl"
        assert main(["check", "--input", str(corpus), "--json", str(out), "--quiet"]) == EXIT_OK
        assert out.read_text() == ""

    def test_malformed_corpus(self, tmp_path):
        corpus = tmp_path / "bad.g6"
        corpus.write_text("C~~\n")
        assert main(["check", "--input", str(corpus), "--quiet"]) == EXIT_USAGE

    def test_missing_file(self, tmp_path):
        assert main(["check", "--input", str(tmp_path / "nope.g6"), "--quiet"]) == EXIT_USAGE

    def test_unknown_verify_name(self):
        assert main(["check", "--verify", "bogus", "--quiet"]) == EXIT_USAGE

    def test_budget_exit_code(self, tmp_path):
        corpus = write_corpus(tmp_path, "cube.g6", cube().graph)
        out = tmp_path / "report.jsonl"
        code = main(["check", "--verify", "circumference-bound", "--input", corpus,
                     "--budget", "3", "--json", str(out), "--quiet"])
        assert code == EXIT_BUDGET
        data = json.loads(out.read_text())
        assert data["verdicts"] == {"circumference-bound": "budget"}
        assert data["budget_exceeded"] is True

    def test_reports_are_deterministic_without_timings(self, tmp_path):
        corpus = write_corpus(tmp_path, "cube.g6", cube().graph)
        first, second = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
        for out in (first, second):
            argv = ["verify-proposition", "--input", corpus, "--json", str(out), "--no-timings", "--quiet"]
            assert main(argv) == EXIT_OK
        assert first.read_bytes() == second.read_bytes()
        assert "timings" not in json.loads(first.read_text())

    def test_csv_summary(self, tmp_path):
        corpus = write_corpus(tmp_path, "two.g6", cube().graph, prism())
        out_csv = tmp_path / "summary.csv"
        code = main(["check", "--verify", "circumference-bound", "--input", corpus,
                     "--json", str(tmp_path / "r.jsonl"), "--csv", str(out_csv), "--quiet"])
        assert code == EXIT_OK
        lines = out_csv.read_text().splitlines()
        assert lines[0] == "file,ordinal,n,m,status,skip_reason,circumference-bound,budget_exceeded"
        assert ",0,8,12,checked,,pass,false" in lines[1]
        assert ",1,6,9,skipped,not cyclically 4-edge-connected,skipped,false" in lines[2]

    def test_count_zero_writes_empty_report(self, tmp_path):
        out = tmp_path / "lemma.jsonl"
        assert main(["verify-lemma", "--count", "0", "--json", str(out), "--quiet"]) == EXIT_OK
        assert out.read_text() == ""

    def test_count_zero_with_explicit_exhaustive(self, tmp_path):
        out = tmp_path / "lemma.jsonl"
        argv = ["verify-lemma", "--count", "0", "--exhaustive", "2", "--json", str(out), "--quiet"]
        assert main(argv) == EXIT_OK
        data = json.loads(out.read_text())
        assert data["details"]["lemma"]["random"]["count"] == 0
        assert data["verdicts"] == {"lemma": "pass"}

    def test_stdout_report(self, capsys):
        code = main(["verify-lemma", "--count", "10", "--max-n", "3", "--exhaustive", "1", "--quiet"])
        assert code == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 1
        assert json.loads(lines[0])["command"] == "verify-lemma"
