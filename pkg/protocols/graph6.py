"""
graph6 編解碼
無嵌入資訊的圖使用 graph6：每個位元組為 6-bit 值加 63，上三角依欄優先排列，
可選的 ">>graph6<<" 標頭。與標準格式逐位元一致。
"""

from typing import Iterator, List, Tuple

from graphs.errors import MalformedEncoding
from graphs.graph_core import Graph

HEADER = ">>graph6<<"
MAX_SHORT_N = 62
MAX_MEDIUM_N = 258047


def _encode_n(n: int) -> List[int]:
    if n <= MAX_SHORT_N:
        return [n]
    if n <= MAX_MEDIUM_N:
        return [63, (n >> 12) & 0x3F, (n >> 6) & 0x3F, n & 0x3F]
    return [63, 63] + [(n >> shift) & 0x3F for shift in (30, 24, 18, 12, 6, 0)]


def _decode_n(data: List[int]) -> Tuple[int, List[int]]:
    if not data:
        raise MalformedEncoding("empty graph6 line")
    if data[0] <= MAX_SHORT_N:
        return data[0], data[1:]
    if len(data) >= 2 and data[1] <= MAX_SHORT_N:
        if len(data) < 4:
            raise MalformedEncoding("graph6 vertex count is cut short")
        return (data[1] << 12) + (data[2] << 6) + data[3], data[4:]
    if len(data) < 8:
        raise MalformedEncoding("graph6 vertex count is cut short")
    n = 0
    for value in data[2:8]:
        n = (n << 6) + value
    return n, data[8:]


def _upper_triangle(n: int) -> Iterator[Tuple[int, int]]:
    """graph6 的位元順序：(0,1), (0,2), (1,2), (0,3), ..."""
    for j in range(1, n):
        for i in range(j):
            yield i, j


def parse_graph6(text: str) -> Graph:
    """解析單行 graph6；格式錯誤時拋出 MalformedEncoding"""
    line = text.strip()
    if line.startswith(HEADER):
        line = line[len(HEADER):]
    data = [ord(ch) - 63 for ch in line]
    if any(not 0 <= d <= 63 for d in data):
        raise MalformedEncoding("graph6 characters must lie in range(63, 127)")

    n, payload = _decode_n(data)
    expected = (n * (n - 1) // 2 + 5) // 6
    if len(payload) != expected:
        raise MalformedEncoding(
            f"expected {expected} payload bytes for n={n}, got {len(payload)}"
        )

    def bits() -> Iterator[int]:
        for d in payload:
            for shift in (5, 4, 3, 2, 1, 0):
                yield (d >> shift) & 1

    edges = [pair for pair, bit in zip(_upper_triangle(n), bits()) if bit]
    return Graph.from_edges(n, edges)


def write_graph6(g: Graph, header: bool = False) -> str:
    """輸出單行 graph6（不含換行）"""
    bits = [1 if g.has_edge(i, j) else 0 for i, j in _upper_triangle(g.n)]
    bits.extend([0] * (-len(bits) % 6))
    values = _encode_n(g.n)
    for k in range(0, len(bits), 6):
        chunk = bits[k:k + 6]
        values.append(sum(b << (5 - i) for i, b in enumerate(chunk)))
    body = "".join(chr(v + 63) for v in values)
    return HEADER + body if header else body


def read_graph6_lines(text: str) -> List[Graph]:
    """
    讀取多行 graph6 語料；空白行略過。
    錯誤訊息附上記錄序號（從 0 起算）。
    """
    graphs = []
    ordinal = 0
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        try:
            graphs.append(parse_graph6(line))
        except (MalformedEncoding, ValueError) as e:
            raise MalformedEncoding(str(e), ordinal=ordinal) from e
        ordinal += 1
    return graphs
