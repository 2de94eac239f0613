"""
無環生成子有向圖
遞迴形式：反覆刪除 d⁺(v) ≤ d⁻(v) 的最小編號頂點 v，
再把 v 連同「從較晚刪除的頂點指向 v」的弧加回。最後 v 是匯點，結果必定無環。

等價的迭代形式：弧 (t, h) 保留若且唯若 h 比 t 先被刪除。
"""

import itertools
import random
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterator, List, Tuple

from graphs.errors import LoopPresent
from graphs.graph_core import Digraph


def removal_order(d: Digraph) -> List[int]:
    """逐步刪除的頂點順序；每一步在剩餘子圖中取 d⁺ ≤ d⁻ 的最小編號頂點"""
    if d.loops():
        raise LoopPresent(f"digraph has loops: {d.loops()[:3]}")
    alive = set(range(d.n))
    out_deg = Counter(t for t, _ in d.arcs)
    in_deg = Counter(h for _, h in d.arcs)
    out_arcs: List[List[int]] = [[] for _ in range(d.n)]
    in_arcs: List[List[int]] = [[] for _ in range(d.n)]
    for t, h in d.arcs:
        out_arcs[t].append(h)
        in_arcs[h].append(t)

    order = []
    while alive:
        # 剩餘子圖中 Σd⁺ = Σd⁻，所以這樣的頂點必定存在
        v = min(u for u in alive if out_deg[u] <= in_deg[u])
        order.append(v)
        alive.remove(v)
        for h in out_arcs[v]:
            if h in alive:
                in_deg[h] -= 1
        for t in in_arcs[v]:
            if t in alive:
                out_deg[t] -= 1
    return order


def acyclic_spanning_subdigraph(d: Digraph) -> Digraph:
    """
    回傳 D 的生成子有向圖 D′：無有向環，且每個頂點 d′⁺(v) + d′⁻(v) ≥ d⁺(v)。
    平行弧逐條處理；D 含 loop 時拋出 LoopPresent。
    """
    order = removal_order(d)
    rank = {v: i for i, v in enumerate(order)}
    kept = tuple(arc for arc in d.arcs if rank[arc[1]] < rank[arc[0]])
    return Digraph(n=d.n, arcs=kept)


def is_acyclic(d: Digraph) -> bool:
    """Kahn 拓撲排序；與建構程序互相獨立的檢查"""
    indeg = [0] * d.n
    succ: List[List[int]] = [[] for _ in range(d.n)]
    for t, h in d.arcs:
        succ[t].append(h)
        indeg[h] += 1
    queue = deque(v for v in range(d.n) if indeg[v] == 0)
    seen = 0
    while queue:
        v = queue.popleft()
        seen += 1
        for h in succ[v]:
            indeg[h] -= 1
            if indeg[h] == 0:
                queue.append(h)
    return seen == d.n


@dataclass
class LemmaOutcome:
    """單一有向圖的後置條件檢查結果"""
    n: int
    arcs: int
    kept: int
    acyclic: bool
    arc_subset: bool
    degree_violations: List[int] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.acyclic and self.arc_subset and not self.degree_violations


def check_postconditions(d: Digraph, sub: Digraph) -> LemmaOutcome:
    """無環、弧為子多重集合、每個頂點的度數下界"""
    arc_subset = sub.n == d.n and not (Counter(sub.arcs) - Counter(d.arcs))
    violations = [
        v for v in range(d.n)
        if sub.out_degree(v) + sub.in_degree(v) < d.out_degree(v)
    ]
    return LemmaOutcome(
        n=d.n,
        arcs=len(d.arcs),
        kept=len(sub.arcs),
        acyclic=is_acyclic(sub),
        arc_subset=arc_subset,
        degree_violations=violations,
    )


def random_digraph(rng: random.Random, n: int, density: float,
                   max_parallel: int = 2) -> Digraph:
    """每個有序對 (u, v), u ≠ v 獨立擲 max_parallel 次，各以機率 density 加一條弧"""
    arcs = []
    for u, v in itertools.permutations(range(n), 2):
        copies = sum(1 for _ in range(max_parallel) if rng.random() < density)
        arcs.extend([(u, v)] * copies)
    return Digraph(n=n, arcs=tuple(arcs))


def random_digraphs(count: int, max_n: int, seed: int) -> Iterator[Digraph]:
    """可重現的隨機無 loop 有向圖序列；頂點數與密度都隨機"""
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, max_n)
        density = rng.random()
        yield random_digraph(rng, n, density)


def all_digraphs(max_n: int, max_parallel: int = 2) -> Iterator[Digraph]:
    """1..max_n 個頂點、每個有序對至多 max_parallel 條平行弧的所有無 loop 有向圖"""
    for n in range(1, max_n + 1):
        pairs: List[Tuple[int, int]] = list(itertools.permutations(range(n), 2))
        for mults in itertools.product(range(max_parallel + 1), repeat=len(pairs)):
            arcs = []
            for pair, k in zip(pairs, mults):
                arcs.extend([pair] * k)
            yield Digraph(n=n, arcs=tuple(arcs))
