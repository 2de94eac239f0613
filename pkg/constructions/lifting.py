"""
環的提升與 Λ 延伸
Y 中的環 C_H 依邊的循環順序在 L(Y) 中誘導出同長度的環 C_G。
C_G 的每條邊 e 落在唯一一個 facial triangle，s_e 是該 triangle 的第三個頂點
（即 Y 中共同端點上不在 C_H 的那條邊）。s 值重複兩次若且唯若它是 C_H 的 chord。

Λ：s 值兩兩相異的極大邊子集。對 Λ′ ⊆ Λ 的每條邊 e，刪除 e 並繞經 s_e，
得到長度 ℓ + |Λ′| 的環。
"""

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Tuple

from graphs.cycle_engine import Cycle
from graphs.errors import CollisionDetected, NotCubic, PreconditionViolation, UniquenessViolation
from graphs.graph_core import Edge, Graph, LineGraphMap, make_edge


def lift_cycle(lmap: LineGraphMap, c_h: Cycle) -> Cycle:
    """C_H 的第 i 條邊對應到 C_G 的第 i 個頂點"""
    if not c_h.is_valid_in(lmap.base):
        raise PreconditionViolation(f"{c_h.vertices} is not a cycle of the base graph")
    return Cycle(tuple(lmap.edge_to_vertex[e] for e in c_h.edges()))


def chords_of(base: Graph, c_h: Cycle) -> Tuple[Edge, ...]:
    """兩端點都在 C_H 上、但不屬於 C_H 的邊"""
    on_cycle = set(c_h.vertices)
    cycle_edges = set(c_h.edges())
    return tuple(
        e for e in base.edges()
        if e[0] in on_cycle and e[1] in on_cycle and e not in cycle_edges
    )


def _apex(lmap: LineGraphMap, a: int, b: int) -> int:
    if not lmap.has_partition:
        raise NotCubic("s-values need the triangle partition of a cubic base graph")
    return lmap.apex(lmap.triangle_of(a, b), a, b)


@dataclass(frozen=True)
class SMap:
    """C_G 每條邊（依循環順序）對應的 s 值"""
    cycle: Cycle
    order: Tuple[Edge, ...]
    values: Dict[Edge, int] = field(hash=False)

    def multiplicity(self) -> Counter:
        return Counter(self.values.values())

    def duplicated(self) -> Tuple[int, ...]:
        return tuple(sorted(s for s, k in self.multiplicity().items() if k > 1))


def compute_s_map(lmap: LineGraphMap, c_g: Cycle) -> SMap:
    """s_e 落在 C_G 上時拋出 UniquenessViolation"""
    on_cycle = set(c_g.vertices)
    order = c_g.edges()
    values = {}
    for a, b in order:
        s = _apex(lmap, a, b)
        if s in on_cycle:
            raise UniquenessViolation(
                f"the triangle through ({a}, {b}) meets the cycle again at {s}"
            )
        values[(a, b) if a < b else (b, a)] = s
    return SMap(cycle=c_g, order=order, values=values)


def duplication_law_holds(lmap: LineGraphMap, c_h: Cycle, smap: SMap) -> bool:
    """每個 s 值出現一或兩次；兩次若且唯若 s（視為 Y 的邊）是 C_H 的 chord"""
    chords = set(chords_of(lmap.base, c_h))
    for s, k in smap.multiplicity().items():
        if k not in (1, 2):
            return False
        if (k == 2) != (lmap.vertex_to_edge[s] in chords):
            return False
    return True


@dataclass(frozen=True)
class LambdaSet:
    """
    edges：Λ 的邊，依 C_G 標準方向的循環順序。
    blocked_by：每條未入選的邊對應到同 s 值的 Λ 邊，即極大性的證據。
    """
    edges: Tuple[Edge, ...]
    s_values: Tuple[int, ...]
    blocked_by: Dict[Edge, Edge] = field(hash=False)

    @property
    def size(self) -> int:
        return len(self.edges)

    def is_maximal(self, smap: SMap) -> bool:
        chosen = set(self.s_values)
        if len(chosen) != len(self.s_values):
            return False
        return all(smap.values[e] in chosen for e in smap.order)


def maximal_lambda(smap: SMap) -> LambdaSet:
    """每個相異 s 值保留一條邊：從 C_G 最小頂點起、標準方向上最先出現者"""
    edges: List[Edge] = []
    s_values: List[int] = []
    first_with: Dict[int, Edge] = {}
    blocked_by = {}
    for e in smap.cycle.canonical().edges():
        s = smap.values[e]
        if s in first_with:
            blocked_by[e] = first_with[s]
            continue
        first_with[s] = e
        edges.append(e)
        s_values.append(s)
    return LambdaSet(edges=tuple(edges), s_values=tuple(s_values), blocked_by=blocked_by)


def lambda_lower_bound(length: int) -> int:
    """⌈(ℓ + 3) / 2⌉"""
    return (length + 4) // 2


def extend_by_lambda(lmap: LineGraphMap, c_g: Cycle, edges: Iterable[Edge]) -> Cycle:
    """
    每條選定的邊 (a, b) 換成路徑 a - s_e - b。
    s_e 落在 C_G 上或與其他選定的 s 值重複時拋出 CollisionDetected。
    """
    on_cycle = set(c_g.vertices)
    cycle_edges = set(c_g.edges())
    detour: Dict[Edge, int] = {}
    used = set()
    for u, v in edges:
        e = make_edge(u, v)
        if e not in cycle_edges:
            raise PreconditionViolation(f"{e} is not an edge of the cycle")
        s = _apex(lmap, *e)
        if s in on_cycle:
            raise CollisionDetected(f"s-value {s} of {e} lies on the cycle")
        if s in used:
            raise CollisionDetected(f"s-value {s} of {e} is already used")
        used.add(s)
        detour[e] = s

    vertices = []
    for a, b in c_g.darts():
        vertices.append(a)
        s = detour.get(make_edge(a, b))
        if s is not None:
            vertices.append(s)
    return Cycle(tuple(vertices))
