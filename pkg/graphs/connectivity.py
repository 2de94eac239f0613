"""
連通度模組
k-vertex-connectivity、小邊割列舉，以及 cubic 圖的 cyclic 4-edge-connectivity 判定。

邊割以暴力法列舉大小 ≤ 3 的邊子集：桌面規模 m ≤ ~60 時約 3.4 萬次分量分析。
"""

from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, List, Tuple

import networkx as nx

from graphs.errors import NotCubic, PreconditionViolation
from graphs.graph_core import Edge, Graph, is_cubic


@dataclass(frozen=True)
class EdgeCut:
    """極小邊割：刪去 edges 後 side_a 與 side_b 分離，每條邊都跨越兩側"""
    edges: Tuple[Edge, ...]
    side_a: FrozenSet[int]
    side_b: FrozenSet[int]

    @property
    def size(self) -> int:
        return len(self.edges)

    def is_vertex_star(self) -> bool:
        return len(self.side_a) == 1 or len(self.side_b) == 1


def is_k_connected(g: Graph, k: int) -> bool:
    """
    沒有少於 k 個頂點的分隔集時為 True。
    以 networkx 的 max-flow node connectivity 計算；需 n > k。
    """
    if k not in (2, 3, 4):
        raise PreconditionViolation(f"k must be 2, 3 or 4, got {k}")
    if g.n <= k:
        raise PreconditionViolation(f"k-connectivity needs more than {k} vertices, got {g.n}")
    if not g.is_connected():
        return False
    return nx.node_connectivity(g.to_networkx()) >= k


def _induced_edge_count(g: Graph, side: FrozenSet[int]) -> int:
    return sum(1 for u, v in g.edges() if u in side and v in side)


def enumerate_small_edge_cuts(g: Graph, max_size: int = 3) -> List[EdgeCut]:
    """
    列出所有大小 ≤ max_size 的極小邊割（bond）：刪去後恰好兩個分量，且每條邊跨越兩側。
    結果依邊序列字典序排列。輸入不連通時回傳單一空割並停止。
    """
    components = g.components()
    if len(components) > 1:
        first = frozenset(components[0])
        rest = frozenset(v for comp in components[1:] for v in comp)
        return [EdgeCut(edges=(), side_a=first, side_b=rest)]

    cuts = []
    edges = g.edges()
    for size in range(1, max_size + 1):
        for subset in combinations(edges, size):
            parts = g.components(removed_edges=subset)
            if len(parts) != 2:
                continue
            side_a, side_b = frozenset(parts[0]), frozenset(parts[1])
            if all((u in side_a) != (v in side_a) for u, v in subset):
                cuts.append(EdgeCut(edges=subset, side_a=side_a, side_b=side_b))
    cuts.sort(key=lambda c: c.edges)
    return cuts


def is_cyclically_4ec(g: Graph) -> bool:
    """
    cyclically 4-edge-connected：3-connected，且每個少於 4 條邊的邊割
    刪去後都留下一個無環分量。
    """
    if not is_cubic(g):
        raise NotCubic("cyclic 4-edge-connectivity is defined here for cubic graphs")
    if g.n <= 3 or not is_k_connected(g, 3):
        return False
    for cut in enumerate_small_edge_cuts(g, 3):
        # 兩側皆連通：無環若且唯若邊數 = 頂點數 - 1
        if not any(_induced_edge_count(g, side) == len(side) - 1
                   for side in (cut.side_a, cut.side_b)):
            return False
    return True


def is_cyclically_4ec_by_stars(g: Graph) -> bool:
    """等價刻劃：3-connected cubic 圖中每個 3-邊割都是某頂點的 star"""
    if not is_cubic(g):
        raise NotCubic("cyclic 4-edge-connectivity is defined here for cubic graphs")
    if g.n <= 3 or not is_k_connected(g, 3):
        return False
    return all(cut.is_vertex_star() for cut in enumerate_small_edge_cuts(g, 3) if cut.size == 3)
