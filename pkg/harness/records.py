"""
VerificationRecord：報表的一筆記錄
JSON-lines 格式，鍵的順序固定（pydantic 依欄位宣告順序輸出），schema 版本 1。
timings 是唯一與執行環境有關的欄位。
"""

from enum import Enum
from typing import Any, Dict, Optional

from pydantic import BaseModel, ConfigDict, Field

SCHEMA_VERSION = 1


class Verdict(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"
    BUDGET = "budget"


class RecordStatus(str, Enum):
    CHECKED = "checked"
    SKIPPED = "skipped"


class CorpusRef(BaseModel):
    file: str
    ordinal: int


class GraphSummary(BaseModel):
    n: int
    m: int
    graph6: str


class Predicates(BaseModel):
    cubic: bool
    planar: Optional[bool] = None
    three_connected: Optional[bool] = None
    cyclically_4ec: Optional[bool] = None
    girth: Optional[int] = None


class WitnessDigest(BaseModel):
    count: int
    digest: str


class VerificationRecord(BaseModel):
    model_config = ConfigDict(populate_by_name=True, use_enum_values=True, validate_default=True)

    schema_version: int = Field(default=SCHEMA_VERSION, alias="schema")
    command: str
    corpus: CorpusRef
    graph: Optional[GraphSummary] = None
    predicates: Optional[Predicates] = None
    status: RecordStatus = RecordStatus.CHECKED
    skip_reason: Optional[str] = None
    verdicts: Dict[str, Verdict] = Field(default_factory=dict)
    details: Dict[str, Any] = Field(default_factory=dict)
    witnesses: Dict[str, WitnessDigest] = Field(default_factory=dict)
    budget_exceeded: bool = False
    timings: Dict[str, float] = Field(default_factory=dict)

    @property
    def failed(self) -> bool:
        return any(v == Verdict.FAIL.value for v in self.verdicts.values())

    @property
    def over_budget(self) -> bool:
        return self.budget_exceeded or any(v == Verdict.BUDGET.value for v in self.verdicts.values())

    def to_json_line(self, include_timings: bool = True) -> str:
        exclude = None if include_timings else {"timings"}
        return self.model_dump_json(by_alias=True, exclude=exclude)
