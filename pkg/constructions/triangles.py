"""
facial triangle 分類與 2-triangle 縮短
L(Y) 的邊恰好被 |V(Y)| 個 facial triangle 分割。給定 Hamilton cycle C，
每個 triangle 依其落在 C 上的邊數分為 0-、1-、2-triangle；
2-triangle 的 center 是同時關聯那兩條 C 邊的頂點。

刪去 center 並補上 triangle 的第三條邊，環長減一。不同 2-triangle 使用的邊互不相交，
任意多個 center 可以同時刪除。
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, Tuple

from graphs.cycle_engine import Cycle
from graphs.errors import NotCubic, NotHamiltonian, NotTwoTriangle
from graphs.graph_core import LineGraphMap, make_edge


@dataclass(frozen=True)
class TriangleClassification:
    """classes[y]：triangle y 在 C 上的邊數；centers[y]：2-triangle 的 center"""
    cycle: Cycle
    classes: Tuple[int, ...]
    centers: Dict[int, int] = field(hash=False)

    @property
    def n(self) -> int:
        return self.cycle.length

    @property
    def tau(self) -> Tuple[int, int, int]:
        return tuple(sum(1 for c in self.classes if c == j) for j in (0, 1, 2))

    def two_triangles(self) -> Tuple[int, ...]:
        return tuple(y for y, c in enumerate(self.classes) if c == 2)

    def identities(self) -> Dict[str, bool]:
        """四個計數恆等式，逐一回報"""
        t0, t1, t2 = self.tau
        n = self.n
        return {
            "triangle_count": 3 * (t0 + t1 + t2) == 2 * n,
            "edge_count": n == 2 * t2 + t1,
            "center_balance": t2 == 3 * t0 + t1,
            "two_triangle_floor": 3 * t2 >= n,
        }

    def holds(self) -> bool:
        return all(self.identities().values())


def classify_triangles(lmap: LineGraphMap, c: Cycle) -> TriangleClassification:
    """c 必須是 L(Y) 的 Hamilton cycle，否則拋出 NotHamiltonian"""
    if not lmap.has_partition:
        raise NotCubic("triangle classification needs a cubic base graph")
    line = lmap.line
    if c.length != line.n or not c.is_valid_in(line):
        raise NotHamiltonian(f"cycle of length {c.length} is not a Hamilton cycle of an {line.n}-vertex graph")

    on_cycle = set(c.edges())
    classes = []
    centers = {}
    for y, (a, b, d) in enumerate(lmap.triangles):
        sides = [make_edge(a, b), make_edge(a, d), make_edge(b, d)]
        used = [e for e in sides if e in on_cycle]
        classes.append(len(used))
        if len(used) == 2:
            (center,) = set(used[0]) & set(used[1])
            centers[y] = center
    return TriangleClassification(cycle=c, classes=tuple(classes), centers=centers)


def shorten_by_centers(lmap: LineGraphMap, c: Cycle, chosen: Iterable[int]) -> Cycle:
    """
    同時刪除 chosen 中每個 2-triangle 的 center，得到長度 n - |chosen| 的環。
    chosen 以 triangle 編號（Y 的頂點）給出。
    """
    classification = classify_triangles(lmap, c)
    chosen = sorted(set(chosen))
    for y in chosen:
        if not 0 <= y < len(classification.classes) or classification.classes[y] != 2:
            raise NotTwoTriangle(f"triangle {y} is not a 2-triangle of the given cycle")
    removed = {classification.centers[y] for y in chosen}
    return Cycle(tuple(x for x in c.vertices if x not in removed))
