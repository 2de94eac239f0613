"""
GraphInstance：一筆語料記錄與其衍生物件
謂詞（cubic、planar、3-connected、cyclically 4-edge-connected、girth）、嵌入、
line graph 以及 H = Y - {u, v} 都在第一次使用時計算並快取。
"""

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Tuple

import networkx as nx

from graphs.connectivity import is_cyclically_4ec, is_k_connected
from graphs.cycle_engine import Cycle, SearchBudget, longest_cycle
from graphs.errors import NonPlanar, PreconditionViolation
from graphs.graph_core import Edge, Graph, LineGraphMap, delete_vertices, girth, is_cubic, line_graph
from graphs.planar_embed import Embedding, Face, compute_embedding, exterior_face_of_H, restrict_embedding
from harness.corpus import CorpusEntry
from protocols.graph6 import write_graph6


@dataclass(frozen=True)
class DerivedH:
    """H = Y - {u, w}，附帶繼承的嵌入與頂點對照"""
    pair: Edge
    graph: Graph
    index: Dict[int, int]
    embedding: Embedding

    @property
    def back(self) -> Dict[int, int]:
        return {new: old for old, new in self.index.items()}

    def degree_two(self) -> List[int]:
        return sorted(x for x in range(self.graph.n) if self.graph.degree(x) == 2)

    def exterior_face(self) -> Face:
        return exterior_face_of_H(self.graph, self.embedding)


class GraphInstance:
    """單筆語料圖的快取包裝"""

    def __init__(self, entry: CorpusEntry):
        self.entry = entry
        self.graph = entry.graph
        self._derived: Dict[Edge, DerivedH] = {}
        self._longest: Dict[Edge, Cycle] = {}

    @property
    def label(self) -> str:
        name = f" ({self.entry.name})" if self.entry.name else ""
        return f"{self.entry.file}#{self.entry.ordinal}{name}"

    @cached_property
    def graph6(self) -> str:
        return write_graph6(self.graph)

    @cached_property
    def cubic(self) -> bool:
        return is_cubic(self.graph)

    @cached_property
    def embedding(self) -> Optional[Embedding]:
        """語料附帶的嵌入原樣使用；否則以平面性測試計算，非平面或不連通時為 None"""
        if self.entry.embedding is not None:
            return self.entry.embedding
        try:
            return compute_embedding(self.graph)
        except (NonPlanar, PreconditionViolation):
            return None

    @cached_property
    def planar(self) -> bool:
        """與連通性無關：每個連通分量都可平面嵌入即為平面"""
        if self.embedding is not None:
            return True
        is_planar, _ = nx.check_planarity(self.graph.to_networkx())
        return is_planar

    @cached_property
    def three_connected(self) -> bool:
        return self.graph.n > 3 and is_k_connected(self.graph, 3)

    @cached_property
    def cyclically_4ec(self) -> bool:
        return self.cubic and is_cyclically_4ec(self.graph)

    @cached_property
    def girth(self) -> Optional[int]:
        value = girth(self.graph)
        return None if math.isinf(value) else int(value)

    def predicates(self) -> Dict[str, object]:
        """報表用的謂詞；前一項不成立時後面的項目不再計算（記為 None）"""
        result: Dict[str, object] = {"cubic": self.cubic, "planar": None,
                                     "three_connected": None, "cyclically_4ec": None,
                                     "girth": self.girth}
        if not self.cubic:
            return result
        result["planar"] = self.planar
        if not self.planar:
            return result
        result["three_connected"] = self.three_connected
        if self.three_connected:
            result["cyclically_4ec"] = self.cyclically_4ec
        return result

    def qualification(self) -> Optional[str]:
        """不符合 cyclically 4-edge-connected cubic 平面圖時回傳略過原因"""
        if not self.cubic:
            return "not cubic"
        if not self.planar:
            return "not planar"
        if not self.three_connected:
            return "not 3-connected"
        if not self.cyclically_4ec:
            return "not cyclically 4-edge-connected"
        return None

    @cached_property
    def line(self) -> Tuple[Graph, LineGraphMap]:
        return line_graph(self.graph, require_partition=True)

    @property
    def line_graph(self) -> Graph:
        return self.line[0]

    @property
    def line_map(self) -> LineGraphMap:
        return self.line[1]

    def adjacent_pairs(self, limit: Optional[int] = None) -> List[Edge]:
        pairs = list(self.graph.edges())
        return pairs if limit is None else pairs[:limit]

    def line_vertices(self, limit: Optional[int] = None) -> List[int]:
        vertices = list(range(self.line_graph.n))
        return vertices if limit is None else vertices[:limit]

    def derive_h(self, pair: Edge) -> DerivedH:
        if pair in self._derived:
            return self._derived[pair]
        if self.embedding is None:
            raise NonPlanar(f"{self.label} has no planar embedding")
        h, index = delete_vertices(self.graph, pair)
        derived = DerivedH(pair=pair, graph=h, index=index,
                           embedding=restrict_embedding(self.embedding, index))
        self._derived[pair] = derived
        return derived

    def longest_cycle_of_h(self, pair: Edge, budget: Optional[SearchBudget] = None) -> Cycle:
        """H 的最長環；同一個 pair 只搜尋一次"""
        if pair not in self._longest:
            self._longest[pair] = longest_cycle(self.derive_h(pair).graph, budget)
        return self._longest[pair]
