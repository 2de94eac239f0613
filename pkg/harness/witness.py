"""
見證驗證與摘要
每個寫成 "pass" 的存在性結論都要經過這裡：以 networkx 重建宿主圖，
獨立於環路搜尋引擎檢查頂點相異、相鄰、閉合、禁用頂點與指定邊。
通過驗證的見證以 sha256 摘要記入報表。
"""

import hashlib
import logging
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

import networkx as nx

from graphs.cycle_engine import Cycle
from graphs.graph_core import Graph

logger = logging.getLogger(__name__)


def witness_digest(host_id: str, cycle: Cycle) -> str:
    text = ",".join(str(v) for v in cycle.canonical().vertices)
    return hashlib.sha256(f"{host_id}:{text}".encode()).hexdigest()[:16]


def combine_digests(digests: Iterable[str]) -> str:
    return hashlib.sha256("\n".join(digests).encode()).hexdigest()[:16]


class WitnessLedger:
    """跨多個宿主圖累積見證摘要（例如同一張 Y 的每個 H）"""

    def __init__(self):
        self.digests: Dict[str, List[str]] = {}
        self.failures: List[str] = []

    def validator(self, host: Graph, host_id: str) -> "WitnessValidator":
        return WitnessValidator(host, host_id, ledger=self)

    def summary(self) -> Dict[str, Dict[str, object]]:
        return {
            key: {"count": len(digests), "digest": combine_digests(digests)}
            for key, digests in self.digests.items()
        }


class WitnessValidator:
    """單一宿主圖的見證驗證器；依 key 累積摘要"""

    def __init__(self, host: Graph, host_id: str, ledger: Optional[WitnessLedger] = None):
        self.host_id = host_id
        self._graph = nx.Graph(host.to_networkx())
        self.ledger = ledger or WitnessLedger()
        self._digests = self.ledger.digests
        self.failures = self.ledger.failures

    def validate(self, cycle: Cycle, length: Optional[int] = None,
                 forbid: Iterable[int] = (), through: Iterable[Tuple[int, int]] = (),
                 length_range: Optional[Tuple[int, int]] = None) -> bool:
        """length_range = (lo, hi) 時要求 lo ≤ 長度 ≤ hi"""
        nodes = list(cycle.vertices)
        if len(nodes) < 3 or len(set(nodes)) != len(nodes):
            return False
        if length is not None and len(nodes) != length:
            return False
        if length_range is not None and not length_range[0] <= len(nodes) <= length_range[1]:
            return False
        if not all(self._graph.has_node(v) for v in nodes):
            return False
        if set(forbid) & set(nodes):
            return False
        walked = list(nx.utils.pairwise(nodes, cyclic=True))
        if not all(self._graph.has_edge(u, v) for u, v in walked):
            return False
        on_cycle = {frozenset(e) for e in walked}
        return all(frozenset(e) in on_cycle for e in through)

    def attachments(self, cycle: Cycle) -> List[Tuple[FrozenSet[int], FrozenSet[int]]]:
        """宿主圖刪去環上頂點後的每個分量，以及它連到的環上頂點"""
        on_cycle = set(cycle.vertices)
        rest = self._graph.subgraph(v for v in self._graph if v not in on_cycle)
        result = []
        for comp in nx.connected_components(rest):
            attached = {w for v in comp for w in self._graph[v] if w in on_cycle}
            result.append((frozenset(comp), frozenset(attached)))
        return sorted(result, key=lambda item: min(item[0]))

    def accept(self, key: str, cycle: Cycle, **conditions) -> bool:
        if self.validate(cycle, **conditions):
            self._digests.setdefault(key, []).append(witness_digest(self.host_id, cycle))
            return True
        self.failures.append(f"{key}: {cycle.vertices}")
        logger.warning("[Witness] rejected %s witness %s on %s", key, cycle.vertices, self.host_id)
        return False

    def count(self, key: str) -> int:
        return len(self._digests.get(key, []))

    def summary(self) -> Dict[str, Dict[str, object]]:
        return self.ledger.summary()
