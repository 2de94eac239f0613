"""
平面嵌入模組
Rotation system、face 走訪、平面性測試，以及 H 的外部 face X 的識別。

走訪規則：dart (u, v) 的下一個 dart 為 (v, w)，其中 w 是 u 在 v 的 rotation 中的後繼。
rotation 採順時針（與 planar_code 相同）；反向的 rotation 只會得到鏡像嵌入，face 集合不變。
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import networkx as nx

from graphs.errors import InvalidEmbedding, NonPlanar, NoSuchFace, PreconditionViolation
from graphs.graph_core import Edge, Graph, make_edge

logger = logging.getLogger(__name__)

Dart = Tuple[int, int]


@dataclass(frozen=True)
class Face:
    """face 的邊界走訪（dart 序列）；length 為邊出現次數"""
    boundary: Tuple[Dart, ...]

    @property
    def length(self) -> int:
        return len(self.boundary)

    @property
    def vertices(self) -> Tuple[int, ...]:
        return tuple(tail for tail, _ in self.boundary)

    def edges(self) -> FrozenSet[Edge]:
        return frozenset(make_edge(u, v) for u, v in self.boundary)

    def is_cycle(self) -> bool:
        verts = self.vertices
        return len(verts) >= 3 and len(set(verts)) == len(verts)


def _normalize(rot: Sequence[int]) -> Tuple[int, ...]:
    """循環序列旋轉到以最小元素開頭"""
    if not rot:
        return ()
    k = rot.index(min(rot))
    return tuple(rot[k:]) + tuple(rot[:k])


@dataclass(frozen=True)
class Embedding:
    """rotation[v]：v 的鄰居依順時針排列的循環序列"""
    rotation: Tuple[Tuple[int, ...], ...]

    @cached_property
    def _position(self) -> List[Dict[int, int]]:
        return [{w: i for i, w in enumerate(rot)} for rot in self.rotation]

    def successor(self, v: int, u: int) -> int:
        """u 在 v 的 rotation 中的下一個鄰居"""
        rot = self.rotation[v]
        return rot[(self._position[v][u] + 1) % len(rot)]

    @cached_property
    def face_list(self) -> Tuple[Face, ...]:
        return tuple(faces(self))

    @property
    def face_count(self) -> int:
        return len(self.face_list)

    def validate(self, g: Graph) -> None:
        """
        檢查 rotation 與圖的關聯一致，且 Euler 公式成立
        （每個連通分量 V - E + F = 2）。失敗時拋出 InvalidEmbedding。
        """
        if len(self.rotation) != g.n:
            raise InvalidEmbedding(f"rotation covers {len(self.rotation)} of {g.n} vertices")
        for v in range(g.n):
            rot = self.rotation[v]
            if len(set(rot)) != len(rot) or tuple(sorted(rot)) != g.adj[v]:
                raise InvalidEmbedding(f"rotation at {v} does not list its incident edges exactly once")
        if g.n == 0:
            return
        components = g.components()
        isolated = sum(1 for c in components if len(c) == 1)
        walks = sum(1 for f in self.face_list if f.length > 0)
        if g.n - g.m + walks + isolated != 2 * len(components):
            raise InvalidEmbedding(
                f"Euler check failed: V={g.n} E={g.m} F={walks + isolated}"
            )


def faces(e: Embedding) -> List[Face]:
    """
    以 dart 的字典序為起點走訪所有 face；每個 face 從它最小的 dart 開始。
    沒有任何邊時回傳單一空 face。
    """
    darts = sorted((v, w) for v, rot in enumerate(e.rotation) for w in rot)
    if not darts:
        return [Face(boundary=())]
    visited = set()
    result = []
    for start in darts:
        if start in visited:
            continue
        walk = []
        dart = start
        while dart not in visited:
            visited.add(dart)
            walk.append(dart)
            u, v = dart
            dart = (v, e.successor(v, u))
        if dart != start:
            raise InvalidEmbedding(f"face walk from {start} does not close")
        result.append(Face(boundary=tuple(walk)))
    return result


def compute_embedding(g: Graph) -> Embedding:
    """
    以 networkx 的 LR 平面性測試取得 rotation system。
    輸入需連通；非平面時拋出 NonPlanar。相同輸入得到相同輸出。
    """
    if g.n == 0 or not g.is_connected():
        raise PreconditionViolation("compute_embedding requires a connected graph")
    is_planar, certificate = nx.check_planarity(g.to_networkx())
    if not is_planar:
        raise NonPlanar(f"graph with n={g.n}, m={g.m} admits no planar embedding")
    rotation = tuple(
        _normalize(list(certificate.neighbors_cw_order(v))) if g.degree(v) else ()
        for v in range(g.n)
    )
    emb = Embedding(rotation=rotation)
    emb.validate(g)
    return emb


def embedding_with_face(g: Graph, cycle: Sequence[int]) -> Optional[Tuple[Embedding, Face]]:
    """
    找一個以 cycle 為 face 的平面嵌入；不存在時回傳 None。g 需為 2-connected。
    cycle 的每條邊細分一次，細分點全部接到新頂點 hub：
    擴充圖平面 ⇔ 某個嵌入中 hub 所在的 face 恰好以 cycle 為邊界。
    """
    k = len(cycle)
    cycle_edges = {make_edge(cycle[i], cycle[(i + 1) % k]) for i in range(k)}
    if k < 3 or len(cycle_edges) != k or any(not g.has_edge(u, v) for u, v in cycle_edges):
        raise PreconditionViolation(f"{tuple(cycle)} is not a cycle of the graph")

    augmented = g.to_networkx()
    hub = ("hub",)
    midpoints: Dict[Tuple[str, int], Edge] = {}
    for i, (u, v) in enumerate(sorted(cycle_edges)):
        mid = ("mid", i)
        midpoints[mid] = (u, v)
        augmented.remove_edge(u, v)
        augmented.add_edges_from([(u, mid), (mid, v), (mid, hub)])
    is_planar, certificate = nx.check_planarity(augmented)
    if not is_planar:
        return None

    rotation = []
    for v in range(g.n):
        order = []
        for w in certificate.neighbors_cw_order(v):
            if w in midpoints:
                a, b = midpoints[w]
                w = b if a == v else a
            order.append(w)
        rotation.append(_normalize(order))
    emb = Embedding(rotation=tuple(rotation))
    emb.validate(g)
    matches = [f for f in emb.face_list if f.edges() == cycle_edges]
    if not matches:
        return None
    return emb, min(matches, key=lambda f: f.boundary)


def embedding_from_faces(n: int, face_walks: Sequence[Sequence[int]]) -> Embedding:
    """
    由方向一致的 face 頂點序列建立 rotation system：
    face 中連續的 (u, v, w) 代表 w 是 u 在 v 的 rotation 中的後繼。
    """
    succ: List[Dict[int, int]] = [dict() for _ in range(n)]
    for walk in face_walks:
        k = len(walk)
        for i in range(k):
            u, v, w = walk[i - 1], walk[i], walk[(i + 1) % k]
            if u in succ[v]:
                raise InvalidEmbedding(f"dart ({u}, {v}) appears in two faces")
            succ[v][u] = w
    rotation = []
    for v in range(n):
        if not succ[v]:
            rotation.append(())
            continue
        start = min(succ[v])
        rot = [start]
        nxt = succ[v][start]
        while nxt != start:
            if nxt in rot or nxt not in succ[v]:
                raise InvalidEmbedding(f"faces around {v} do not form a single rotation")
            rot.append(nxt)
            nxt = succ[v][nxt]
        if len(rot) != len(succ[v]):
            raise InvalidEmbedding(f"faces around {v} do not form a single rotation")
        rotation.append(tuple(rot))
    return Embedding(rotation=tuple(rotation))


def restrict_embedding(e: Embedding, index: Dict[int, int]) -> Embedding:
    """
    刪除頂點後的誘導嵌入；index 為 delete_vertices 回傳的 old → new 對照。
    平面 rotation system 刪點後仍是平面嵌入。
    """
    rotation: List[Tuple[int, ...]] = [()] * len(index)
    for old, new in index.items():
        rotation[new] = _normalize([index[w] for w in e.rotation[old] if w in index])
    return Embedding(rotation=tuple(rotation))


def exterior_face_of_H(h: Graph, e: Embedding) -> Face:
    """
    H = Y 刪去兩個相鄰頂點後，恰有四個 degree-2 頂點；
    回傳包含這四個頂點的 face X。若有多個候選，取 dart 序列字典序最小者。
    """
    e.validate(h)
    deg2 = {v for v in range(h.n) if h.degree(v) == 2}
    if len(deg2) != 4:
        raise NoSuchFace(f"expected exactly four degree-2 vertices, found {len(deg2)}")
    candidates = [f for f in e.face_list if deg2 <= set(f.vertices)]
    if not candidates:
        raise NoSuchFace("no face contains all four degree-2 vertices")
    if len(candidates) > 1:
        logger.debug("[Embed] %d faces contain all degree-2 vertices", len(candidates))
    return min(candidates, key=lambda f: f.boundary)


def face_length_profile(e: Embedding) -> List[int]:
    """face 長度的排序多重集合"""
    return sorted(f.length for f in e.face_list)
