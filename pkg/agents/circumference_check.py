"""Circumference 下界：每個 H 的 circumference ≥ ⌈3|V(H)|/4 + 1/2⌉"""

from typing import Optional

from agents.base_check import CheckOutcome, DerivedHCheck, RunOptions, verdict_of
from config.settings import Settings
from harness.instance import GraphInstance
from harness.witness import WitnessLedger


def circumference_floor(order: int) -> int:
    """⌈3N/4 + 1/2⌉ = ⌊(3N + 5) / 4⌋"""
    return (3 * order + 5) // 4


class CircumferenceBoundCheck(DerivedHCheck):

    def __init__(self, settings: Optional[Settings] = None):
        settings = settings or Settings()
        super().__init__(settings.CHECK_REGISTRY["circumference-bound"])

    def _execute(self, instance: GraphInstance, options: RunOptions) -> CheckOutcome:
        ledger = WitnessLedger()
        pairs = instance.adjacent_pairs(options.max_pairs)
        violations = []
        slack = None
        for pair in pairs:
            h = instance.derive_h(pair).graph
            longest = instance.longest_cycle_of_h(pair, self.new_budget(options))
            floor = circumference_floor(h.n)
            valid = ledger.validator(h, self.host_id(instance, pair)).accept("circumference", longest)
            if not valid or longest.length < floor:
                violations.append({"pair": list(pair), "circumference": longest.length, "floor": floor})
            gap = longest.length - floor
            slack = gap if slack is None else min(slack, gap)

        return CheckOutcome(
            verdicts={"circumference-bound": verdict_of(not violations)},
            details={"pairs": len(pairs), "min_slack": slack, "violations": violations[:10]},
            witnesses=ledger.summary(),
        )
