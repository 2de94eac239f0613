"""
內建語料
K4、立方體 Q3、正十二面體，各自附帶以 face 列表編譯的多面體嵌入
（face 以一致方向列出，經 embedding_from_faces 轉為 rotation system）。
另有測試用的小圖：prism、Petersen、cycle、path、octahedron。
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

import networkx as nx

from graphs.graph_core import Graph, line_graph
from graphs.planar_embed import Embedding, embedding_from_faces

K4_FACES: Tuple[Tuple[int, ...], ...] = ((0, 1, 3), (1, 2, 3), (2, 0, 3), (0, 2, 1))

CUBE_FACES: Tuple[Tuple[int, ...], ...] = (
    (0, 1, 5, 4), (1, 2, 6, 5), (2, 3, 7, 6), (3, 0, 4, 7), (4, 5, 6, 7), (0, 3, 2, 1),
)


def _dodecahedron_faces() -> List[Tuple[int, ...]]:
    # 外圈 a_i = i，中圈 b_j = 5 + j（j mod 10），內圈 c_i = 15 + i
    def a(i: int) -> int:
        return i % 5

    def b(j: int) -> int:
        return 5 + j % 10

    def c(i: int) -> int:
        return 15 + i % 5

    faces = []
    for i in range(5):
        faces.append((a(i), a(i + 1), b(2 * i + 2), b(2 * i + 1), b(2 * i)))
        faces.append((b(2 * i + 1), b(2 * i + 2), b(2 * i + 3), c(i + 1), c(i)))
    faces.append(tuple(c(i) for i in range(5)))
    faces.append((a(0), a(4), a(3), a(2), a(1)))
    return faces


DODECAHEDRON_FACES = tuple(_dodecahedron_faces())


def graph_from_faces(n: int, face_walks: Sequence[Sequence[int]]) -> Graph:
    edges = set()
    for walk in face_walks:
        for i in range(len(walk)):
            u, v = walk[i], walk[(i + 1) % len(walk)]
            edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(n, sorted(edges))


@dataclass(frozen=True)
class Fixture:
    name: str
    graph: Graph
    embedding: Embedding


def _fixture(name: str, n: int, face_walks) -> Fixture:
    graph = graph_from_faces(n, face_walks)
    embedding = embedding_from_faces(n, face_walks)
    embedding.validate(graph)
    return Fixture(name=name, graph=graph, embedding=embedding)


def k4() -> Fixture:
    return _fixture("k4", 4, K4_FACES)


def cube() -> Fixture:
    return _fixture("cube", 8, CUBE_FACES)


def dodecahedron() -> Fixture:
    return _fixture("dodecahedron", 20, DODECAHEDRON_FACES)


FIXTURE_BUILDERS = {
    "k4": k4,
    "cube": cube,
    "dodecahedron": dodecahedron,
}


def builtin_fixtures() -> List[Fixture]:
    return [build() for build in FIXTURE_BUILDERS.values()]


# === 測試用小圖 ===

def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def prism() -> Graph:
    """三角柱：兩個三角形以完美匹配相連"""
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5),
                                (0, 3), (1, 4), (2, 5)])


def petersen() -> Graph:
    return Graph.from_networkx(nx.petersen_graph())


def octahedron() -> Graph:
    line, _ = line_graph(k4().graph)
    return line


def parallel_paths() -> Graph:
    """兩極 0、1 之間並聯一條邊與路徑 0-2-1、0-3-1、0-4-5-1；2-connected 但嵌入不唯一"""
    return Graph.from_edges(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (4, 5), (1, 5)])
