"""
Lemma Check
以固定 seed 產生隨機無 loop 有向圖，再加上 exhaustive_n 以內的全部有向圖，
逐一執行 acyclic_spanning_subdigraph 並檢查後置條件。不需要語料。
"""

from typing import Iterable, Optional

from agents.base_check import BaseCheck, CheckOutcome, RunOptions, verdict_of
from config.settings import Settings
from constructions.acyclic import acyclic_spanning_subdigraph, all_digraphs, check_postconditions, random_digraphs
from graphs.graph_core import Digraph
from harness.instance import GraphInstance


def _tally(digraphs: Iterable[Digraph], failures: list) -> dict:
    count = passed = 0
    for d in digraphs:
        count += 1
        outcome = check_postconditions(d, acyclic_spanning_subdigraph(d))
        if outcome.passed:
            passed += 1
        elif len(failures) < 10:
            failures.append({"n": d.n, "arcs": [list(a) for a in d.arcs],
                             "acyclic": outcome.acyclic,
                             "degree_violations": outcome.degree_violations})
    return {"count": count, "passed": passed}


class LemmaCheck(BaseCheck):

    def __init__(self, settings: Optional[Settings] = None):
        settings = settings or Settings()
        super().__init__(settings.CHECK_REGISTRY["lemma"])

    def _execute(self, instance: Optional[GraphInstance], options: RunOptions) -> CheckOutcome:
        failures = []
        random_part = _tally(random_digraphs(options.count, options.max_n, options.seed), failures)
        exhaustive_part = _tally(all_digraphs(options.exhaustive_n), failures)
        return CheckOutcome(
            verdicts={"lemma": verdict_of(not failures)},
            details={
                "seed": options.seed,
                "max_n": options.max_n,
                "random": random_part,
                "exhaustive": dict(exhaustive_part, max_n=options.exhaustive_n),
                "failures": failures,
            },
        )
