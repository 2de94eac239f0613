"""
語料讀取
支援 graph6（文字、無嵌入）、planar_code（二進位、附嵌入）與內建 fixtures。
語料中每張圖以 (檔名, 記錄序號) 識別；不做同構去重。
"""

import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional

import networkx as nx

from graphs.errors import MalformedEncoding, UsageError
from graphs.graph_core import Graph
from graphs.planar_embed import Embedding
from harness.fixtures import builtin_fixtures
from protocols import graph6, planar_code

logger = logging.getLogger(__name__)

FORMATS = ("graph6", "planar_code", "auto", "fixtures")
FIXTURE_SOURCE = "<fixtures>"
ATLAS_SOURCE = "<atlas>"


@dataclass(frozen=True)
class CorpusEntry:
    file: str
    ordinal: int
    graph: Graph
    embedding: Optional[Embedding] = None
    name: str = ""


def detect_format(data: bytes) -> str:
    """planar_code 標頭或任何非 graph6 字元（空白除外）→ planar_code；否則 graph6"""
    if data.startswith(b">>planar_code"):
        return "planar_code"
    if data.startswith(graph6.HEADER.encode()):
        return "graph6"
    body = b"".join(data.split())
    if all(63 <= byte <= 126 for byte in body):
        return "graph6"
    return "planar_code"


def parse_corpus(data: bytes, source: str, fmt: str = "auto") -> List[CorpusEntry]:
    if fmt not in FORMATS or fmt == "fixtures":
        raise UsageError(f"unsupported corpus format: {fmt}")
    if fmt == "auto":
        fmt = detect_format(data)
    if fmt == "graph6":
        try:
            text = data.decode("ascii")
        except UnicodeDecodeError as e:
            raise MalformedEncoding(f"graph6 corpus {source} is not ASCII") from e
        graphs = graph6.read_graph6_lines(text)
        entries = [CorpusEntry(file=source, ordinal=i, graph=g) for i, g in enumerate(graphs)]
    else:
        records = planar_code.parse_planar_code(data)
        entries = [
            CorpusEntry(file=source, ordinal=i, graph=g, embedding=emb)
            for i, (g, emb) in enumerate(records)
        ]
    logger.info("[Corpus] %s: %d records (%s)", source, len(entries), fmt)
    return entries


def fixture_entries() -> List[CorpusEntry]:
    return [
        CorpusEntry(file=FIXTURE_SOURCE, ordinal=i, graph=f.graph, embedding=f.embedding, name=f.name)
        for i, f in enumerate(builtin_fixtures())
    ]


def atlas_entries(max_n: int, limit: int = 7) -> List[CorpusEntry]:
    """
    networkx graph atlas（至多 7 個頂點、同構類各一）中 2-connected 的平面圖；
    ordinal 為 atlas 編號，嵌入由平面性測試計算。
    """
    max_n = min(max_n, limit)
    entries = []
    for index, g in enumerate(nx.graph_atlas_g()):
        order = g.number_of_nodes()
        if order > max_n:
            break
        if order < 3 or not nx.is_biconnected(g):
            continue
        planar, _ = nx.check_planarity(g)
        if planar:
            entries.append(CorpusEntry(file=ATLAS_SOURCE, ordinal=index, graph=Graph.from_networkx(g)))
    logger.info("[Corpus] atlas: %d 2-connected plane graphs with n ≤ %d", len(entries), max_n)
    return entries


def load_corpus(paths: Iterable[str], fmt: str = "auto") -> List[CorpusEntry]:
    """
    依序讀取每個檔案；沒有指定檔案或 fmt 為 fixtures 時使用內建語料。
    讀取失敗拋出 OSError，內容損毀拋出附記錄序號的 MalformedEncoding。
    """
    paths = list(paths)
    if fmt == "fixtures" or not paths:
        return fixture_entries()
    entries: List[CorpusEntry] = []
    for path in paths:
        with open(path, "rb") as f:
            data = f.read()
        try:
            entries.extend(parse_corpus(data, path, fmt))
        except MalformedEncoding as e:
            raise MalformedEncoding(f"{path}: {e}") from e
    return entries
