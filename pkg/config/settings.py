"""
Cycle Spectrum Verifier 設定模組
管理搜尋預算、取樣規模、Lemma / TEL 產生器參數與檢查註冊表。
每個欄位皆可由同名環境變數覆寫。
"""

import os
from dataclasses import dataclass, field
from typing import Dict, List


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name, "")
    return int(raw) if raw.strip() else default


@dataclass
class CheckConfig:
    """單一驗證檢查的配置"""
    name: str
    title: str
    verdicts: List[str] = field(default_factory=list)
    scope: str = "instance"
    description: str = ""


@dataclass
class Settings:
    """系統全域設定"""

    # === 搜尋預算 ===
    CYCLE_BUDGET: int = field(default_factory=lambda: _env_int("CYCLE_BUDGET", 10 ** 8))

    # === 取樣（大型語料圖）===
    SAMPLE_THRESHOLD: int = field(default_factory=lambda: _env_int("SAMPLE_THRESHOLD", 20))
    SAMPLE_SIZE: int = field(default_factory=lambda: _env_int("SAMPLE_SIZE", 4))

    # === Lemma 產生器 ===
    LEMMA_COUNT: int = field(default_factory=lambda: _env_int("LEMMA_COUNT", 10000))
    LEMMA_MAX_N: int = field(default_factory=lambda: _env_int("LEMMA_MAX_N", 9))
    LEMMA_SEED: int = field(default_factory=lambda: _env_int("LEMMA_SEED", 1))
    LEMMA_EXHAUSTIVE_N: int = field(default_factory=lambda: _env_int("LEMMA_EXHAUSTIVE_N", 3))

    # === Three Edge Lemma 目錄（graph atlas 只涵蓋到 7 個頂點）===
    TEL_MAX_N: int = field(default_factory=lambda: _env_int("TEL_MAX_N", 6))
    TEL_ATLAS_LIMIT: int = 7

    # === Triangle 恆等式：每個 line graph 分類的 Hamilton cycle 數 ===
    HAMILTON_SAMPLE: int = field(default_factory=lambda: _env_int("HAMILTON_SAMPLE", 25))

    # === 執行 ===
    WORKERS: int = field(default_factory=lambda: _env_int("WORKERS", 1))
    LOG_LEVEL: str = field(default_factory=lambda: os.getenv("LOG_LEVEL", "INFO"))

    # === 檢查註冊表 ===
    CHECK_REGISTRY: Dict[str, CheckConfig] = field(default_factory=lambda: {
        "proposition": CheckConfig(
            name="proposition",
            title="區間環長",
            verdicts=["proposition"],
            description="H = Y - {u, v} 對每個偶數 k ≤ circumference(H) 都有長度在 [k, 3k/2] 的環",
        ),
        "theorem": CheckConfig(
            name="theorem",
            title="L(Y) - v 的環長",
            verdicts=["theorem", "lambda-bound"],
            description="L(Y) 的每個頂點 v，G - v 都有長度 3 與 5..n-1 的環",
        ),
        "triangle-identities": CheckConfig(
            name="triangle-identities",
            title="Triangle 計數恆等式",
            verdicts=["triangle-identities"],
            description="取樣 L(Y) 的 Hamilton cycle，檢查 τ0, τ1, τ2 的四個恆等式",
        ),
        "circumference-bound": CheckConfig(
            name="circumference-bound",
            title="Circumference 下界",
            verdicts=["circumference-bound"],
            description="每個 H 的 circumference ≥ ⌈3|V(H)|/4 + 1/2⌉",
        ),
        "tel-oracle": CheckConfig(
            name="tel-oracle",
            title="Three Edge Lemma 見證",
            verdicts=["tel-oracle"],
            description="經過 v1, v2, v3 邊的 TEL 見證，以及 ℓ(C) ≥ 3|V(H) - V(C)| + 2",
        ),
        "girth-control": CheckConfig(
            name="girth-control",
            title="Girth 5 對照",
            verdicts=["girth-control"],
            description="girth(Y) ≥ 5 時 L(Y) 沒有 4-cycle",
        ),
        "tightness": CheckConfig(
            name="tightness",
            title="區間緊緻度掃描",
            verdicts=["tightness"],
            description="Y 與每個 H：max over k of m(k)/k，標記 m(k) > 3k/2 的反例",
        ),
        "lemma": CheckConfig(
            name="lemma",
            title="無環生成子有向圖",
            verdicts=["lemma"],
            scope="generated",
            description="隨機與窮舉的無 loop 有向圖，檢查無環性與度數下界",
        ),
        "tel-catalog": CheckConfig(
            name="tel-catalog",
            title="Three Edge Lemma 目錄",
            verdicts=["tel-catalog"],
            scope="catalog",
            description="2-connected 平面圖的每個 face 與其上每組三條邊都有 TEL 見證",
        ),
    })

    # === 報表 ===
    SCHEMA_VERSION: int = 1

    def instance_checks(self) -> List[str]:
        return [name for name, cfg in self.CHECK_REGISTRY.items() if cfg.scope == "instance"]
