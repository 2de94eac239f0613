"""
Theorem Check
對 L(Y) 的每個頂點 v（或取樣的前幾個），G - v 必須有長度 3 與 5..n-1 的環。

- constructive 模式：重播四個建構階段（triangle / face / shortening / lambda），
  建構沒有涵蓋的長度以直接搜尋補上並記為 search；同時產生 lambda-bound verdict：
  s 值重複規則、Λ 極大性、經過 v1, v2, v3 時 |Λ| ≥ ⌈(ℓ+3)/2⌉，
  以及每個單一邊與整個 Λ 的延伸都通過驗證。
- oracle 模式：每個長度直接搜尋；另外記錄整張 L(Y) 的 spectrum
  是否包含 {3, 5, 6} ∪ {n-7, …, n}。
"""

from collections import Counter
from typing import Dict, List, Optional

from agents.base_check import CheckOutcome, QualifiedCheck, RunOptions, verdict_of
from config.settings import Settings
from constructions.lifting import compute_s_map, extend_by_lambda
from constructions.theorem_replay import PHASE_SEARCH, LambdaWitness, replay_theorem, theorem_targets
from graphs.cycle_engine import Cycle, SearchBudget, cycle_spectrum, find_cycle_of_length
from graphs.graph_core import LineGraphMap
from harness.instance import GraphInstance
from harness.records import Verdict
from harness.witness import WitnessLedger, WitnessValidator


def known_lengths(n: int) -> List[int]:
    """4-connected 平面圖必有的環長"""
    return sorted({l for l in {3, 5, 6} | set(range(n - 7, n + 1)) if 3 <= l <= n})


class TheoremCheck(QualifiedCheck):

    def __init__(self, settings: Optional[Settings] = None):
        settings = settings or Settings()
        super().__init__(settings.CHECK_REGISTRY["theorem"])

    def _lambda_ok(self, lmap: LineGraphMap, witness: LambdaWitness, v: int,
                   validator: WitnessValidator) -> bool:
        if not (witness.duplication_law and witness.bound_ok):
            return False
        if not witness.lam.is_maximal(compute_s_map(lmap, witness.lifted)):
            return False
        subsets = [[e] for e in witness.lam.edges] + [list(witness.lam.edges)]
        for subset in subsets:
            extended = extend_by_lambda(lmap, witness.lifted, subset)
            if not validator.accept("lambda-extension", extended,
                                    length=witness.length + len(subset), forbid=(v,)):
                return False
        return True

    def _constructive(self, instance: GraphInstance, v: int, budget: SearchBudget,
                      validator: WitnessValidator, lambda_stats: Dict[str, object]) -> Dict[int, Cycle]:
        g, lmap = instance.line_graph, instance.line_map
        replay = replay_theorem(instance.graph, instance.embedding, lmap, v, budget)
        cycles = dict(replay.cycles)
        phases = dict(replay.phases)
        for length in replay.missing():
            found = find_cycle_of_length(g, length, forbid=v, budget=budget)
            if found is not None:
                cycles[length] = found
                phases[length] = PHASE_SEARCH
        lambda_stats["phases"].update(phases.values())

        for witness in replay.lambda_witnesses:
            lambda_stats["witnesses"] += 1
            if witness.through_degree_two:
                lambda_stats["through_degree_two"] += 1
                slack = witness.lam.size - witness.bound
                current = lambda_stats["min_slack"]
                lambda_stats["min_slack"] = slack if current is None else min(current, slack)
            if not self._lambda_ok(lmap, witness, v, validator):
                lambda_stats["failures"].append({"v": v, "length": witness.length,
                                                 "lambda": witness.lam.size})
        return cycles

    def _execute(self, instance: GraphInstance, options: RunOptions) -> CheckOutcome:
        g = instance.line_graph
        targets = theorem_targets(g.n)
        vertices = instance.line_vertices(options.max_vertices)
        ledger = WitnessLedger()
        validator = ledger.validator(g, f"{instance.graph6}-L")
        lambda_stats: Dict[str, object] = {"witnesses": 0, "through_degree_two": 0,
                                           "min_slack": None, "failures": [],
                                           "phases": Counter()}
        failures = []
        for v in vertices:
            budget = self.new_budget(options)
            if options.mode == "constructive":
                cycles = self._constructive(instance, v, budget, validator, lambda_stats)
            else:
                cycles = {l: find_cycle_of_length(g, l, forbid=v, budget=budget) for l in targets}
            for length in targets:
                cycle = cycles.get(length)
                if cycle is None or not validator.accept("theorem", cycle, length=length, forbid=(v,)):
                    failures.append({"v": v, "length": length})

        details = {
            "mode": options.mode,
            "vertices": len(vertices),
            "targets": [targets[0], targets[-1]] if targets else [],
            "failures": failures[:10],
        }
        verdicts = {"theorem": verdict_of(not failures)}
        if options.mode == "constructive":
            phases = lambda_stats.pop("phases")
            details["phases"] = {k: phases[k] for k in sorted(phases)}
            details["lambda"] = lambda_stats
            if lambda_stats["witnesses"]:
                verdicts["lambda-bound"] = verdict_of(not lambda_stats["failures"])
            else:
                verdicts["lambda-bound"] = Verdict.SKIPPED
        else:
            spectrum = cycle_spectrum(g, budget=self.new_budget(options), host=f"{instance.graph6}-L")
            expected = known_lengths(g.n)
            details["spectrum"] = list(spectrum.present)
            details["known_lengths"] = all(l in spectrum for l in expected)
            verdicts["lambda-bound"] = Verdict.SKIPPED

        return CheckOutcome(verdicts=verdicts, details=details, witnesses=ledger.summary())
