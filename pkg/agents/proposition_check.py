"""
Proposition Check
對 Y 的每一對相鄰頂點 {u, v}（或取樣的前幾對），H = Y - {u, v}，
每個偶數 4 ≤ k ≤ circumference(H) 都要有長度在 [k, 3k/2] 的環。
找不到即為反例，記為 fail。
"""

from typing import Optional

from agents.base_check import CheckOutcome, DerivedHCheck, RunOptions, verdict_of
from config.settings import Settings
from graphs.cycle_engine import CycleSearch
from harness.instance import GraphInstance
from harness.witness import WitnessLedger


class PropositionCheck(DerivedHCheck):

    def __init__(self, settings: Optional[Settings] = None):
        settings = settings or Settings()
        super().__init__(settings.CHECK_REGISTRY["proposition"])

    def _execute(self, instance: GraphInstance, options: RunOptions) -> CheckOutcome:
        ledger = WitnessLedger()
        pairs = instance.adjacent_pairs(options.max_pairs)
        windows = 0
        failures = []
        circumferences = []
        for pair in pairs:
            h = instance.derive_h(pair).graph
            validator = ledger.validator(h, self.host_id(instance, pair))
            circ = instance.longest_cycle_of_h(pair, self.new_budget(options)).length
            circumferences.append(circ)
            search = CycleSearch(h, budget=self.new_budget(options))
            for k in range(4, circ + 1, 2):
                upper = min(3 * k // 2, h.n)
                witness = None
                for length in range(k, upper + 1):
                    witness = search.find(length)
                    if witness is not None:
                        break
                window = (k, 3 * k // 2)
                if witness is None or not validator.accept("proposition", witness, length_range=window):
                    failures.append({"pair": list(pair), "k": k})
                    continue
                windows += 1

        outcome = CheckOutcome(
            verdicts={"proposition": verdict_of(not failures)},
            details={
                "pairs": len(pairs),
                "windows": windows,
                "circumference_range": [min(circumferences), max(circumferences)] if circumferences else [],
                "failures": failures[:10],
            },
            witnesses=ledger.summary(),
        )
        return outcome
