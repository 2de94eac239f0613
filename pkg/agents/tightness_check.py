"""
區間緊緻度掃描
對 Y 本身以及每個 H（girth ≥ 4 時）計算完整 spectrum，
每個偶數 4 ≤ k ≤ circumference：m(k) = 不小於 k 的最短環長。
回報 max m(k)/k；m(k) > 3k/2 即為反例並記為 fail。
"""

from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from agents.base_check import CheckOutcome, QualifiedCheck, RunOptions, verdict_of
from config.settings import Settings
from graphs.cycle_engine import CycleSpectrum, cycle_spectrum
from graphs.graph_core import Graph
from harness.instance import GraphInstance
from harness.witness import WitnessLedger


def interval_ratios(spectrum: CycleSpectrum) -> List[Tuple[int, int]]:
    """[(k, m(k))]，k 為 4..circumference 的偶數"""
    present = spectrum.present
    if not present:
        return []
    rows = []
    for k in range(4, present[-1] + 1, 2):
        rows.append((k, min(l for l in present if l >= k)))
    return rows


class TightnessCheck(QualifiedCheck):

    def __init__(self, settings: Optional[Settings] = None):
        settings = settings or Settings()
        super().__init__(settings.CHECK_REGISTRY["tightness"])

    def _hosts(self, instance: GraphInstance, options: RunOptions) -> List[Tuple[str, Graph]]:
        hosts = [("Y", instance.graph)]
        if instance.girth is not None and instance.girth >= 4:
            for pair in instance.adjacent_pairs(options.max_pairs):
                hosts.append((f"H{pair[0]}-{pair[1]}", instance.derive_h(pair).graph))
        return hosts

    def _execute(self, instance: GraphInstance, options: RunOptions) -> CheckOutcome:
        ledger = WitnessLedger()
        worst = Fraction(0)
        worst_at: Dict[str, object] = {}
        flags = []
        windows = 0
        for name, g in self._hosts(instance, options):
            host = f"{instance.graph6}-{name}"
            spectrum = cycle_spectrum(g, budget=self.new_budget(options), host=host)
            validator = ledger.validator(g, host)
            for k, m in interval_ratios(spectrum):
                windows += 1
                validator.accept("tightness", spectrum.witnesses[m], length=m)
                ratio = Fraction(m, k)
                if ratio > worst:
                    worst = ratio
                    worst_at = {"graph": name, "k": k, "m": m}
                if 2 * m > 3 * k:
                    flags.append({"graph": name, "k": k, "m": m})

        return CheckOutcome(
            verdicts={"tightness": verdict_of(not flags and not ledger.failures)},
            details={
                "windows": windows,
                "max_ratio": round(float(worst), 6),
                "max_ratio_exact": f"{worst.numerator}/{worst.denominator}",
                "worst": worst_at,
                "flags": flags[:10],
            },
            witnesses=ledger.summary(),
        )
