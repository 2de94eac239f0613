"""
Check 基底類別
所有驗證檢查的共同抽象介面。子類別只需實作 _execute()；
run() 負責適用性判斷、計時，並把例外轉成 verdict：
BudgetExceeded → budget，PreconditionViolation → skipped，其他例外（含 GraphError）→ fail。
"""

import logging
import time
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from config.settings import CheckConfig, Settings
from graphs.cycle_engine import SearchBudget
from graphs.errors import BudgetExceeded, GraphError, PreconditionViolation
from harness.instance import GraphInstance
from harness.records import Verdict

logger = logging.getLogger(__name__)


@dataclass
class RunOptions:
    """單次執行的參數；預設值來自 Settings，CLI 旗標覆寫"""
    mode: str = "constructive"
    budget: int = 10 ** 8
    seed: int = 1
    max_pairs: Optional[int] = None
    max_vertices: Optional[int] = None
    count: int = 10000
    max_n: int = 9
    exhaustive_n: int = 3
    tel_max_n: int = 6
    hamilton_sample: int = 25

    @classmethod
    def from_settings(cls, settings: Settings, **overrides) -> "RunOptions":
        options = cls(
            budget=settings.CYCLE_BUDGET,
            seed=settings.LEMMA_SEED,
            count=settings.LEMMA_COUNT,
            max_n=settings.LEMMA_MAX_N,
            exhaustive_n=settings.LEMMA_EXHAUSTIVE_N,
            tel_max_n=settings.TEL_MAX_N,
            hamilton_sample=settings.HAMILTON_SAMPLE,
        )
        for key, value in overrides.items():
            if value is not None:
                setattr(options, key, value)
        return options


@dataclass
class CheckOutcome:
    """單一檢查對單一記錄的結果"""
    verdicts: Dict[str, Verdict] = field(default_factory=dict)
    details: Dict[str, Any] = field(default_factory=dict)
    witnesses: Dict[str, Dict[str, Any]] = field(default_factory=dict)
    budget_exceeded: bool = False
    elapsed: float = 0.0


def verdict_of(ok: bool) -> Verdict:
    return Verdict.PASS if ok else Verdict.FAIL


class BaseCheck(ABC):
    """
    所有驗證檢查的抽象基底類別。
    verdict_keys 來自 CheckConfig；一個檢查可以產生多個 verdict（例如 theorem 與 lambda-bound）。
    """

    def __init__(self, config: CheckConfig):
        self.name = config.name
        self.title = config.title
        self.description = config.description
        self.verdict_keys = list(config.verdicts) or [config.name]
        self.status = "IDLE"
        self._run_count = 0

    def applies_to(self, instance: Optional[GraphInstance]) -> Optional[str]:
        """不適用時回傳略過原因"""
        return None

    def new_budget(self, options: RunOptions) -> SearchBudget:
        return SearchBudget(options.budget)

    def uniform(self, verdict: Verdict, **details) -> CheckOutcome:
        return CheckOutcome(verdicts={k: verdict for k in self.verdict_keys}, details=dict(details))

    def run(self, instance: Optional[GraphInstance], options: RunOptions) -> CheckOutcome:
        self.status = "WORKING"
        self._run_count += 1
        label = instance.label if instance is not None else "<generated>"
        start = time.perf_counter()
        try:
            reason = self.applies_to(instance)
            if reason:
                outcome = self.uniform(Verdict.SKIPPED, reason=reason)
            else:
                outcome = self._execute(instance, options)
        except BudgetExceeded as e:
            outcome = self.uniform(Verdict.BUDGET, error=str(e))
            outcome.budget_exceeded = True
        except PreconditionViolation as e:
            outcome = self.uniform(Verdict.SKIPPED, reason=f"{type(e).__name__}: {e}")
        except GraphError as e:
            outcome = self.uniform(Verdict.FAIL, error=f"{type(e).__name__}: {e}")
        except Exception as e:
            logger.exception("[%s] %s raised an unexpected error", self.name, label)
            outcome = self.uniform(Verdict.FAIL, error=f"{type(e).__name__}: {e}")
        outcome.elapsed = time.perf_counter() - start
        self.status = "IDLE"

        summary = ", ".join(f"{k}={v.value if isinstance(v, Verdict) else v}"
                            for k, v in outcome.verdicts.items())
        logger.info("[%s] %s → %s (%.2fs)", self.name, label, summary, outcome.elapsed)
        return outcome

    @abstractmethod
    def _execute(self, instance: Optional[GraphInstance], options: RunOptions) -> CheckOutcome:
        """子類別必須實作的核心驗證邏輯。"""

    def get_status(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "title": self.title,
            "status": self.status,
            "runs": self._run_count,
            "description": self.description,
        }

    def __repr__(self):
        return f"<{self.name} | {self.title} | {self.status}>"


class QualifiedCheck(BaseCheck):
    """只處理 cyclically 4-edge-connected cubic 平面圖的檢查"""

    def applies_to(self, instance: Optional[GraphInstance]) -> Optional[str]:
        if instance is None:
            return "needs a corpus graph"
        return instance.qualification()


class DerivedHCheck(QualifiedCheck):
    """逐一處理 H = Y - {u, v}；需要 girth ≥ 4（K4 刪去兩點只剩一條邊）"""

    def applies_to(self, instance: Optional[GraphInstance]) -> Optional[str]:
        reason = super().applies_to(instance)
        if reason:
            return reason
        if instance.girth is not None and instance.girth < 4:
            return f"girth {instance.girth} < 4"
        return None

    @staticmethod
    def host_id(instance: GraphInstance, pair) -> str:
        return f"{instance.graph6}-{pair[0]}-{pair[1]}"
