"""
環路搜尋引擎
精確的環長存在性、cycle spectrum、circumference，以及受限搜尋
（必經指定邊、避開指定頂點或邊），包含 Three Edge Lemma 見證的窮舉搜尋。

搜尋策略：逐長度回溯 DFS。
- 無必經邊時固定環上最小編號頂點為錨點，只擴展到更大的頂點；
  以 path[1] < path[-1] 排除反向重複，每個環恰好產生一次。
- 有必經邊時以字典序最小的必經邊 (a, b) 為起點，方向固定為 a → b。
- 剪枝：到錨點的 BFS 距離下界、剩餘可達頂點數、必經邊的內部頂點約束。
鄰居一律依編號遞增探索，回傳第一個找到的見證，結果可重現。
每次呼叫帶有節點展開上限，超過時拋出 BudgetExceeded，絕不回傳錯誤答案。
"""

import logging
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from graphs.errors import Acyclic, BudgetExceeded, PreconditionViolation, TheoremViolation
from graphs.graph_core import Edge, Graph, girth, make_edge
from graphs.planar_embed import Embedding, Face

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 10 ** 8


class SearchBudget:
    """節點展開計數器；可在多次搜尋之間共用"""

    def __init__(self, limit: int = DEFAULT_BUDGET):
        self.limit = limit
        self.used = 0

    def tick(self):
        self.used += 1
        if self.used > self.limit:
            raise BudgetExceeded(self.limit)

    def __repr__(self):
        return f"<SearchBudget {self.used}/{self.limit}>"


@dataclass(frozen=True)
class Cycle:
    """環：頂點循環序列，長度 = 邊數 = 頂點數 ≥ 3"""
    vertices: Tuple[int, ...]

    def __post_init__(self):
        if len(self.vertices) < 3:
            raise ValueError(f"a cycle needs at least 3 vertices, got {len(self.vertices)}")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError(f"cycle repeats a vertex: {self.vertices}")

    @property
    def length(self) -> int:
        return len(self.vertices)

    def darts(self) -> Tuple[Tuple[int, int], ...]:
        vs = self.vertices
        return tuple((vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))

    def edges(self) -> Tuple[Edge, ...]:
        """環上的邊，依循環順序"""
        return tuple(make_edge(u, v) for u, v in self.darts())

    def canonical(self) -> "Cycle":
        """旋轉到最小頂點開頭，並選擇第二個頂點較小的方向"""
        vs = self.vertices
        k = vs.index(min(vs))
        rotated = vs[k:] + vs[:k]
        if rotated[1] > rotated[-1]:
            rotated = (rotated[0],) + tuple(reversed(rotated[1:]))
        return Cycle(rotated)

    def is_valid_in(self, g: Graph, forbid: Iterable[int] = ()) -> bool:
        blocked = set(forbid)
        if any(not 0 <= v < g.n or v in blocked for v in self.vertices):
            return False
        return all(g.has_edge(u, v) for u, v in self.darts())


class CycleSearch:
    """
    在 g 中搜尋指定長度的環。
    forbid_vertices / forbid_edges 不可使用；require_edges 必須全部在環上。
    """

    def __init__(self, g: Graph, forbid_vertices: Iterable[int] = (),
                 forbid_edges: Iterable[Edge] = (),
                 require_edges: Iterable[Edge] = (),
                 budget: Optional[SearchBudget] = None):
        self.g = g
        self.budget = budget or SearchBudget()
        self.blocked = [False] * g.n
        for v in forbid_vertices:
            self.blocked[v] = True
        self.forbidden_edges = {make_edge(u, v) for u, v in forbid_edges}
        self.required = sorted({make_edge(u, v) for u, v in require_edges})

        self.nbrs: List[Tuple[int, ...]] = []
        for u in range(g.n):
            if self.blocked[u]:
                self.nbrs.append(())
                continue
            self.nbrs.append(tuple(
                w for w in g.adj[u]
                if not self.blocked[w] and make_edge(u, w) not in self.forbidden_edges
            ))
        self.nbr_sets = [set(ns) for ns in self.nbrs]

        self.req_at: List[Set[int]] = [set() for _ in range(g.n)]
        self._impossible = False
        for u, v in self.required:
            if v not in self.nbr_sets[u]:
                self._impossible = True
            self.req_at[u].add(v)
            self.req_at[v].add(u)
        if any(len(r) > 2 for r in self.req_at):
            self._impossible = True

    def find(self, length: int) -> Optional[Cycle]:
        return next(self.iter_cycles(length), None)

    def iter_cycles(self, length: int) -> Iterator[Cycle]:
        """依固定順序產生所有長度為 length 的合格環，每個環一次"""
        if length < 3 or length > self.g.n or self._impossible:
            return
        if len(self.required) > length:
            return
        if self.required:
            a, b = self.required[0]
            yield from self._search(anchor=a, first=b, length=length, floor=None)
            return
        for s in range(self.g.n):
            if not self.blocked[s]:
                yield from self._search(anchor=s, first=None, length=length, floor=s)

    def _allowed(self, w: int, floor: Optional[int]) -> bool:
        return floor is None or w > floor

    def _distances(self, anchor: int, floor: Optional[int]) -> List[int]:
        dist = [-1] * self.g.n
        dist[anchor] = 0
        queue = deque([anchor])
        while queue:
            u = queue.popleft()
            for w in self.nbrs[u]:
                if dist[w] < 0 and self._allowed(w, floor):
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def _enough_room(self, u: int, need: int, on_path: List[bool],
                     floor: Optional[int]) -> bool:
        """從 u 出發、不經過路徑的可達頂點至少 need 個，且未走的必經端點皆可達"""
        seen = {u}
        queue = deque([u])
        count = 0
        while queue:
            x = queue.popleft()
            for w in self.nbrs[x]:
                if w in seen or on_path[w] or not self._allowed(w, floor):
                    continue
                seen.add(w)
                count += 1
                queue.append(w)
        if count < need:
            return False
        for a, b in self.required:
            for end in (a, b):
                if not on_path[end] and end not in seen:
                    return False
        return True

    def _search(self, anchor: int, first: Optional[int], length: int,
                floor: Optional[int]) -> Iterator[Cycle]:
        dist = self._distances(anchor, floor)
        on_path = [False] * self.g.n
        on_path[anchor] = True
        path = [anchor]
        required = self.required
        req_at = self.req_at

        def closes(u: int) -> bool:
            if anchor not in self.nbr_sets[u]:
                return False
            if floor is not None and path[1] > path[-1]:
                return False
            if req_at[u] - {path[-2], anchor}:
                return False
            if req_at[anchor] - {path[1], u}:
                return False
            cycle_edges = {make_edge(path[i], path[(i + 1) % length]) for i in range(length)}
            return all(e in cycle_edges for e in required)

        def extend(u: int) -> Iterator[Cycle]:
            self.budget.tick()
            depth = len(path)
            if depth == length:
                if closes(u):
                    yield Cycle(tuple(path))
                return

            remaining = length - depth
            if depth == 1 and first is not None:
                candidates: Sequence[int] = (first,) if first in self.nbr_sets[u] else ()
            else:
                pending = req_at[u] - {path[-2]} if depth >= 2 else set()
                if len(pending) > 1:
                    return
                if pending:
                    (only,) = pending
                    candidates = (only,) if only in self.nbr_sets[u] else ()
                else:
                    candidates = self.nbrs[u]

            if remaining >= 3 and not self._enough_room(u, remaining, on_path, floor):
                return

            for w in candidates:
                if on_path[w] or not self._allowed(w, floor):
                    continue
                if dist[w] < 0 or dist[w] > remaining:
                    continue
                if req_at[w] and len(req_at[w] - {u}) > 1:
                    continue
                on_path[w] = True
                path.append(w)
                yield from extend(w)
                path.pop()
                on_path[w] = False

        yield from extend(anchor)


@dataclass(frozen=True)
class CycleSpectrum:
    """
    host 在（可選的）禁用頂點下的環長集合；每個出現的長度保存一個見證環。
    upper 為檢查過的最大長度。
    """
    host: str
    forbid: Optional[int]
    upper: int
    witnesses: Dict[int, Cycle] = field(hash=False)

    @property
    def present(self) -> Tuple[int, ...]:
        return tuple(sorted(self.witnesses))

    def absent(self) -> Tuple[int, ...]:
        return tuple(l for l in range(3, self.upper + 1) if l not in self.witnesses)

    def __contains__(self, length: int) -> bool:
        return length in self.witnesses


def find_cycle_of_length(g: Graph, l: int, forbid: Optional[int] = None,
                         budget: Optional[SearchBudget] = None) -> Optional[Cycle]:
    """長度恰為 l、避開 forbid 的環；不存在時回傳 None（精確判定）"""
    if not 3 <= l <= max(g.n, 3):
        raise PreconditionViolation(f"cycle length {l} outside [3, {g.n}]")
    forbid_vertices = () if forbid is None else (forbid,)
    return CycleSearch(g, forbid_vertices=forbid_vertices, budget=budget).find(l)


def cycle_spectrum(g: Graph, forbid: Optional[int] = None,
                   budget: Optional[SearchBudget] = None, host: str = "") -> CycleSpectrum:
    """對 3..n 的每個長度逐一搜尋；同一個 budget 涵蓋整次呼叫"""
    budget = budget or SearchBudget()
    forbid_vertices = () if forbid is None else (forbid,)
    search = CycleSearch(g, forbid_vertices=forbid_vertices, budget=budget)
    upper = g.n - len(forbid_vertices)
    witnesses = {}
    for l in range(3, upper + 1):
        cycle = search.find(l)
        if cycle is not None:
            witnesses[l] = cycle
    logger.debug("[Engine] spectrum of %s (forbid=%s): %s after %d expansions",
                  host or "graph", forbid, sorted(witnesses), budget.used)
    return CycleSpectrum(host=host, forbid=forbid, upper=upper, witnesses=witnesses)


def longest_cycle(g: Graph, budget: Optional[SearchBudget] = None) -> Cycle:
    """最長環的見證；由 n 往下逐長度搜尋"""
    if math.isinf(girth(g)):
        raise Acyclic(f"graph with n={g.n}, m={g.m} has no cycle")
    search = CycleSearch(g, budget=budget)
    for l in range(g.n, 2, -1):
        cycle = search.find(l)
        if cycle is not None:
            return cycle
    raise Acyclic(f"graph with n={g.n}, m={g.m} has no cycle")


def circumference(g: Graph, budget: Optional[SearchBudget] = None) -> int:
    return longest_cycle(g, budget).length


def component_attachments(g: Graph, cycle: Cycle) -> List[Tuple[List[int], Set[int]]]:
    """H - V(C) 的每個分量，以及它連到的環上頂點"""
    on_cycle = set(cycle.vertices)
    result = []
    for comp in g.components(removed_vertices=on_cycle):
        attached = {w for v in comp for w in g.adj[v] if w in on_cycle}
        result.append((comp, attached))
    return result


def satisfies_attachment_bounds(g: Graph, cycle: Cycle, x_vertices: Set[int]) -> bool:
    """每個分量至多連到 3 個環上頂點；含 X 頂點的分量至多 2 個"""
    for comp, attached in component_attachments(g, cycle):
        if len(attached) > 3:
            return False
        if len(attached) > 2 and x_vertices.intersection(comp):
            return False
    return True


def tel_witness(g: Graph, emb: Embedding, x: Face, t: Edge, y: Edge, s: Edge,
                budget: Optional[SearchBudget] = None) -> Cycle:
    """
    Three Edge Lemma 的窮舉見證：依長度遞增列舉經過 t, y, s 的環，
    回傳第一個同時滿足兩個 attachment 條件者。找不到即 TheoremViolation。
    """
    face_edges = x.edges()
    for e in (t, y, s):
        if make_edge(*e) not in face_edges:
            raise PreconditionViolation(f"edge {e} is not on the prescribed face")
    x_vertices = set(x.vertices)
    search = CycleSearch(g, require_edges=(t, y, s), budget=budget)
    for length in range(3, g.n + 1):
        for cycle in search.iter_cycles(length):
            if satisfies_attachment_bounds(g, cycle, x_vertices):
                return cycle
    raise TheoremViolation(f"no Three Edge Lemma witness through {t}, {y}, {s}")


def hamilton_cycle_through(g: Graph, e1: Edge, e2: Edge, avoid_edge: Edge,
                           budget: Optional[SearchBudget] = None) -> Optional[Cycle]:
    """g - avoid_edge 中經過 e1, e2 的 Hamilton cycle；不存在時回傳 None"""
    e1, e2, avoid = make_edge(*e1), make_edge(*e2), make_edge(*avoid_edge)
    if e1 == e2 or not set(e1) & set(e2):
        raise PreconditionViolation(f"{e1} and {e2} must be distinct edges sharing a vertex")
    if avoid in (e1, e2):
        raise PreconditionViolation(f"avoided edge {avoid} coincides with a required edge")
    search = CycleSearch(g, forbid_edges=(avoid,), require_edges=(e1, e2), budget=budget)
    return search.find(g.n)
