"""
planar_code 編解碼
平面圖生成器（plantri 等）輸出的二進位嵌入格式：
可選標頭 ">>planar_code<<"（或 ">>planar_code le<<" / ">>planar_code be<<"），
每筆記錄為頂點數，接著每個頂點依順時針列出鄰居（1-based），以 0 結尾。
頂點數超過 255 時，記錄以一個 0 位元組開頭並改用 2-byte 欄位。
"""

from typing import Iterable, List, Tuple

from graphs.errors import InvalidEmbedding, MalformedEncoding, TruncatedStream
from graphs.graph_core import Graph
from graphs.planar_embed import Embedding

HEADER = b">>planar_code<<"
_HEADER_PREFIX = b">>planar_code"


def _read_header(data: bytes) -> Tuple[int, str]:
    """回傳 (payload 起點, byte order)"""
    if not data.startswith(_HEADER_PREFIX):
        return 0, "little"
    end = data.find(b"<<", len(_HEADER_PREFIX))
    if end < 0:
        raise MalformedEncoding("unterminated planar_code header")
    header = data[:end + 2]
    byteorder = "big" if b" be" in header else "little"
    return end + 2, byteorder


def _build_record(rotation: List[Tuple[int, ...]], ordinal: int) -> Tuple[Graph, Embedding]:
    n = len(rotation)
    edges = []
    for v, nbrs in enumerate(rotation):
        if len(set(nbrs)) != len(nbrs):
            raise MalformedEncoding(f"vertex {v + 1} lists a neighbor twice", ordinal=ordinal)
        for w in nbrs:
            if w == v:
                raise MalformedEncoding(f"self-loop at vertex {v + 1}", ordinal=ordinal)
            if v not in rotation[w]:
                raise MalformedEncoding(
                    f"edge {v + 1}-{w + 1} is listed only at one end", ordinal=ordinal
                )
            if v < w:
                edges.append((v, w))
    graph = Graph.from_edges(n, edges)
    embedding = Embedding(rotation=tuple(rotation))
    try:
        embedding.validate(graph)
    except InvalidEmbedding as e:
        raise MalformedEncoding(str(e), ordinal=ordinal) from e
    return graph, embedding


def parse_planar_code(data: bytes) -> List[Tuple[Graph, Embedding]]:
    """
    解析 planar_code 串流。rotation 原樣讀入（轉為 0-based），僅做驗證不重算。
    記錄中途結束時拋出 TruncatedStream。
    """
    pos, byteorder = _read_header(data)
    records = []
    ordinal = 0
    while pos < len(data):
        width = 1
        n = data[pos]
        pos += 1
        if n == 0:
            width = 2
            if pos + 2 > len(data):
                raise TruncatedStream("stream ends inside the vertex count", ordinal=ordinal)
            n = int.from_bytes(data[pos:pos + 2], byteorder)
            pos += 2
            if n == 0:
                raise MalformedEncoding("record with zero vertices", ordinal=ordinal)

        rotation: List[Tuple[int, ...]] = []
        for v in range(n):
            nbrs = []
            while True:
                if pos + width > len(data):
                    raise TruncatedStream(
                        f"stream ends inside the neighbor list of vertex {v + 1}",
                        ordinal=ordinal,
                    )
                value = int.from_bytes(data[pos:pos + width], byteorder)
                pos += width
                if value == 0:
                    break
                if value > n:
                    raise MalformedEncoding(
                        f"neighbor {value} out of range for n={n}", ordinal=ordinal
                    )
                nbrs.append(value - 1)
            rotation.append(tuple(nbrs))

        records.append(_build_record(rotation, ordinal))
        ordinal += 1
    return records


def write_planar_code(records: Iterable[Tuple[Graph, Embedding]], header: bool = True) -> bytes:
    """輸出 planar_code；超過 255 個頂點的記錄使用 little-endian 2-byte 欄位"""
    out = bytearray(HEADER if header else b"")
    for graph, embedding in records:
        embedding.validate(graph)
        if graph.n <= 255:
            out.append(graph.n)
            for rot in embedding.rotation:
                out.extend(w + 1 for w in rot)
                out.append(0)
        else:
            out.append(0)
            out.extend(graph.n.to_bytes(2, "little"))
            for rot in embedding.rotation:
                for w in rot:
                    out.extend((w + 1).to_bytes(2, "little"))
                out.extend((0).to_bytes(2, "little"))
    return bytes(out)
