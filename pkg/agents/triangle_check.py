"""
Triangle 恆等式
依固定順序列舉 L(Y) 的前 HAMILTON_SAMPLE 個 Hamilton cycle，逐一分類 facial triangle，
檢查 τ0 + τ1 + τ2 = 2n/3、n = 2τ2 + τ1、τ2 = 3τ0 + τ1、τ2 ≥ n/3。
"""

from itertools import islice
from typing import Optional

from agents.base_check import CheckOutcome, QualifiedCheck, RunOptions, verdict_of
from config.settings import Settings
from constructions.triangles import classify_triangles
from graphs.cycle_engine import CycleSearch
from harness.instance import GraphInstance
from harness.witness import WitnessLedger


class TriangleIdentityCheck(QualifiedCheck):

    def __init__(self, settings: Optional[Settings] = None):
        settings = settings or Settings()
        super().__init__(settings.CHECK_REGISTRY["triangle-identities"])

    def _execute(self, instance: GraphInstance, options: RunOptions) -> CheckOutcome:
        g, lmap = instance.line_graph, instance.line_map
        ledger = WitnessLedger()
        validator = ledger.validator(g, f"{instance.graph6}-L")
        search = CycleSearch(g, budget=self.new_budget(options))

        classified = 0
        profiles = set()
        failures = []
        for cycle in islice(search.iter_cycles(g.n), options.hamilton_sample):
            classification = classify_triangles(lmap, cycle)
            classified += 1
            profiles.add(classification.tau)
            broken = [name for name, ok in classification.identities().items() if not ok]
            if broken or not validator.accept("hamilton", cycle, length=g.n):
                failures.append({"tau": list(classification.tau), "broken": broken})

        return CheckOutcome(
            verdicts={"triangle-identities": verdict_of(classified > 0 and not failures)},
            details={
                "hamilton_cycles": classified,
                "tau_profiles": [list(t) for t in sorted(profiles)],
                "failures": failures[:10],
            },
            witnesses=ledger.summary(),
        )
