"""Girth 5 對照組：girth(Y) ≥ 5 時，L(Y) 窮舉搜尋不到任何 4-cycle"""

from typing import Optional

from agents.base_check import CheckOutcome, QualifiedCheck, RunOptions, verdict_of
from config.settings import Settings
from graphs.cycle_engine import find_cycle_of_length
from harness.instance import GraphInstance


class GirthControlCheck(QualifiedCheck):

    def __init__(self, settings: Optional[Settings] = None):
        settings = settings or Settings()
        super().__init__(settings.CHECK_REGISTRY["girth-control"])

    def applies_to(self, instance: Optional[GraphInstance]) -> Optional[str]:
        reason = super().applies_to(instance)
        if reason:
            return reason
        if instance.girth is None or instance.girth < 5:
            return f"girth {instance.girth} < 5"
        return None

    def _execute(self, instance: GraphInstance, options: RunOptions) -> CheckOutcome:
        four_cycle = find_cycle_of_length(instance.line_graph, 4, budget=self.new_budget(options))
        details = {"girth": instance.girth, "line_order": instance.line_graph.n}
        if four_cycle is not None:
            details["four_cycle"] = list(four_cycle.vertices)
        return CheckOutcome(verdicts={"girth-control": verdict_of(four_cycle is None)}, details=details)
