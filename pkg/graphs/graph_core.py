"""
圖形核心模組
Graph / Digraph / LineGraphMap 資料型別，以及 line graph、誘導子圖、girth 等基本運算。

頂點一律是 0..n-1 的整數；所有型別建構後不可變，可在 worker 之間安全共享。
"""

import math
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple, Union

import networkx as nx

from graphs.errors import NotCubic, PreconditionViolation

Edge = Tuple[int, int]


def make_edge(u: int, v: int) -> Edge:
    """無向邊的正規形式 (min, max)"""
    if u == v:
        raise PreconditionViolation(f"edge endpoints must differ: ({u}, {v})")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """
    簡單無向圖（adjacency-list 語意）。
    adj[v] 為已排序、無重複的鄰居 tuple；建構時檢查對稱性與無 self-loop。
    """
    n: int
    adj: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        for v, nbrs in enumerate(self.adj):
            if list(nbrs) != sorted(set(nbrs)):
                raise ValueError(f"neighbors of {v} must be sorted and distinct")
            for w in nbrs:
                if w == v:
                    raise ValueError(f"self-loop at {v}")
                if not 0 <= w < self.n:
                    raise ValueError(f"neighbor {w} of {v} out of range")
                if v not in self.adj[w]:
                    raise ValueError(f"asymmetric adjacency between {v} and {w}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        """由邊列表建立；重複邊或 self-loop 視為錯誤"""
        rows: List[set] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if v in rows[u]:
                raise ValueError(f"repeated edge ({u}, {v})")
            rows[u].add(v)
            rows[v].add(u)
        return cls(n=n, adj=tuple(tuple(sorted(r)) for r in rows))

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> "Graph":
        """節點依排序重新編號為 0..n-1"""
        order = sorted(g.nodes())
        index = {node: i for i, node in enumerate(order)}
        return cls.from_edges(len(order), ((index[u], index[v]) for u, v in g.edges()))

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g

    @cached_property
    def m(self) -> int:
        return sum(len(nbrs) for nbrs in self.adj) // 2

    def edges(self) -> Tuple[Edge, ...]:
        """所有邊 (u, v), u < v，依字典序排列"""
        return tuple((u, w) for u in range(self.n) for w in self.adj[u] if u < w)

    @cached_property
    def edge_set(self) -> FrozenSet[Edge]:
        return frozenset(self.edges())

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and make_edge(u, v) in self.edge_set

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.adj[v]

    def components(self, removed_vertices: Iterable[int] = (),
                   removed_edges: Iterable[Edge] = ()) -> List[List[int]]:
        """刪除指定頂點 / 邊後的連通分量，各分量內排序、分量依最小頂點排序"""
        gone = set(removed_vertices)
        cut = {make_edge(u, v) for u, v in removed_edges}
        seen = [False] * self.n
        result = []
        for root in range(self.n):
            if seen[root] or root in gone:
                continue
            seen[root] = True
            comp = [root]
            queue = deque([root])
            while queue:
                u = queue.popleft()
                for w in self.adj[u]:
                    if seen[w] or w in gone:
                        continue
                    if cut and make_edge(u, w) in cut:
                        continue
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
            result.append(sorted(comp))
        return result

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1


@dataclass(frozen=True)
class Digraph:
    """無 loop 的有向圖；允許平行弧（Lemma 只禁止 loop）"""
    n: int
    arcs: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        for tail, head in self.arcs:
            if not (0 <= tail < self.n and 0 <= head < self.n):
                raise ValueError(f"arc ({tail}, {head}) out of range for n={self.n}")

    @cached_property
    def _out(self) -> Counter:
        return Counter(t for t, _ in self.arcs)

    @cached_property
    def _in(self) -> Counter:
        return Counter(h for _, h in self.arcs)

    def out_degree(self, v: int) -> int:
        return self._out[v]

    def in_degree(self, v: int) -> int:
        return self._in[v]

    def loops(self) -> List[Tuple[int, int]]:
        return [(t, h) for t, h in self.arcs if t == h]

    def to_networkx(self) -> nx.MultiDiGraph:
        g = nx.MultiDiGraph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.arcs)
        return g


@dataclass(frozen=True)
class LineGraphMap:
    """
    Y 與 L(Y) 之間的對應。
    - vertex_to_edge[x]：L(Y) 頂點 x 對應的 Y 邊
    - edge_to_vertex：反向對應
    - triangles[y]：Y 頂點 y 的三條關聯邊所對應的 L(Y) 頂點（Y 為 cubic 時）
    """
    base: Graph
    line: Graph
    vertex_to_edge: Tuple[Edge, ...]
    edge_to_vertex: Dict[Edge, int] = field(hash=False)
    triangles: Tuple[Tuple[int, ...], ...] = ()

    @property
    def has_partition(self) -> bool:
        return len(self.triangles) == self.base.n and self.base.n > 0

    def shared_endpoint(self, a: int, b: int) -> Optional[int]:
        """L(Y) 頂點 a, b 所對應 Y 邊的共同端點"""
        common = set(self.vertex_to_edge[a]) & set(self.vertex_to_edge[b])
        return next(iter(common)) if common else None

    def triangle_of(self, a: int, b: int) -> int:
        """包含 L(Y) 邊 (a, b) 的 facial triangle（以 Y 頂點編號）"""
        y = self.shared_endpoint(a, b)
        if y is None or a == b:
            raise PreconditionViolation(f"({a}, {b}) is not an edge of the line graph")
        return y

    def triangles_at(self, x: int) -> Edge:
        """L(Y) 頂點 x 所在的兩個 facial triangle"""
        return self.vertex_to_edge[x]

    def apex(self, y: int, a: int, b: int) -> int:
        """triangle y 中 a, b 以外的頂點"""
        rest = [x for x in self.triangles[y] if x != a and x != b]
        if len(rest) != 1:
            raise PreconditionViolation(f"({a}, {b}) is not an edge of triangle {y}")
        return rest[0]


def line_graph(y: Graph, require_partition: bool = False) -> Tuple[Graph, LineGraphMap]:
    """
    建立 L(Y)：頂點為 Y 的邊（依字典序編號），兩頂點相鄰若且唯若對應邊共用端點。
    Y 為 cubic 時同時記錄每個 Y 頂點對應的 facial triangle。
    """
    edges = y.edges()
    edge_to_vertex = {e: i for i, e in enumerate(edges)}
    incident: List[List[int]] = [[] for _ in range(y.n)]
    for i, (a, b) in enumerate(edges):
        incident[a].append(i)
        incident[b].append(i)

    line_edges = set()
    for v in range(y.n):
        for i, j in combinations(incident[v], 2):
            line_edges.add((i, j))
    line = Graph.from_edges(len(edges), sorted(line_edges))

    cubic = is_cubic(y)
    if require_partition and not cubic:
        raise NotCubic("triangle partition requires a cubic graph")
    triangles = tuple(tuple(incident[v]) for v in range(y.n)) if cubic else ()

    lmap = LineGraphMap(
        base=y,
        line=line,
        vertex_to_edge=edges,
        edge_to_vertex=edge_to_vertex,
        triangles=triangles,
    )
    return line, lmap


def delete_vertices(g: Graph, s: Iterable[int]) -> Tuple[Graph, Dict[int, int]]:
    """誘導子圖 g - s，頂點重新壓縮編號；回傳 old → new 對照表"""
    removed = set(s)
    for v in removed:
        if not 0 <= v < g.n:
            raise PreconditionViolation(f"vertex {v} not in graph")
    keep = [v for v in range(g.n) if v not in removed]
    index = {old: new for new, old in enumerate(keep)}
    edges = [(index[u], index[v]) for u, v in g.edges() if u in index and v in index]
    return Graph.from_edges(len(keep), edges), index


def is_cubic(g: Graph) -> bool:
    return g.n > 0 and all(len(nbrs) == 3 for nbrs in g.adj)


def girth(g: Graph) -> Union[int, float]:
    """最短環長度；forest 回傳 math.inf。每個頂點做一次 BFS。"""
    best: Union[int, float] = math.inf
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in g.adj[u]:
                if dist[w] == -1:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
    return best
