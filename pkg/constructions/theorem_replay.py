"""
L(Y) - v 環長的建構式重播
對 L(Y) 的頂點 v（Y 的邊 pq），依序以四個階段產生長度 l ∈ {3} ∪ {5, …, n-1} 的環：

1. triangle：不含 v 的 facial triangle
2. face：Y 中長度 4 或 5、不含邊 pq 的 face，提升到 L(Y)；長度 4 時再繞經一個 s 值
3. shortening：G - e₃ 中經過 e₁, e₂ 的 Hamilton cycle，刪去 v 及其他 2-triangle 的 center
4. lambda：H = Y - {p, q} 中長度在 [2a, 3a] 的環（a = l // 3），提升後以 Λ 延伸到長度 l

每個階段只填入尚未取得的長度；沒有階段涵蓋的長度留給呼叫端改用直接搜尋。
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from constructions.lifting import (
    LambdaSet,
    compute_s_map,
    duplication_law_holds,
    extend_by_lambda,
    lambda_lower_bound,
    lift_cycle,
    maximal_lambda,
)
from constructions.triangles import TriangleClassification, classify_triangles, shorten_by_centers
from graphs.cycle_engine import Cycle, CycleSearch, SearchBudget, hamilton_cycle_through
from graphs.errors import CollisionDetected, TheoremViolation
from graphs.graph_core import Edge, Graph, LineGraphMap, delete_vertices, make_edge
from graphs.planar_embed import Embedding

logger = logging.getLogger(__name__)

PHASE_TRIANGLE = "triangle"
PHASE_FACE = "face"
PHASE_SHORTENING = "shortening"
PHASE_LAMBDA = "lambda"
PHASE_SEARCH = "search"


def theorem_targets(n: int) -> Tuple[int, ...]:
    return (3,) + tuple(range(5, n))


@dataclass
class LambdaWitness:
    """lambda 階段使用的一個 H 中的環，以及它的 Λ 統計"""
    a: int
    base_cycle: Cycle
    lifted: Cycle
    lam: LambdaSet
    through_degree_two: bool
    duplication_law: bool

    @property
    def length(self) -> int:
        return self.lifted.length

    @property
    def bound(self) -> int:
        return lambda_lower_bound(self.length)

    @property
    def bound_ok(self) -> bool:
        # 下界只對經過 v1, v2, v3 的環成立
        return not self.through_degree_two or self.lam.size >= self.bound


@dataclass
class TheoremReplay:
    vertex: int
    targets: Tuple[int, ...]
    cycles: Dict[int, Cycle] = field(default_factory=dict)
    phases: Dict[int, str] = field(default_factory=dict)
    hamilton: Optional[TriangleClassification] = None
    lambda_witnesses: List[LambdaWitness] = field(default_factory=list)

    def record(self, length: int, cycle: Cycle, phase: str):
        if length in self.targets and length not in self.cycles:
            if cycle.length != length:
                raise TheoremViolation(f"{phase} phase produced length {cycle.length}, expected {length}")
            self.cycles[length] = cycle
            self.phases[length] = phase

    def missing(self) -> Tuple[int, ...]:
        return tuple(l for l in self.targets if l not in self.cycles)

    def phase_counts(self) -> Dict[str, int]:
        counts: Dict[str, int] = {}
        for phase in self.phases.values():
            counts[phase] = counts.get(phase, 0) + 1
        return counts


def replay_theorem(y: Graph, emb_y: Embedding, lmap: LineGraphMap, v: int,
                   budget: Optional[SearchBudget] = None) -> TheoremReplay:
    """Y 須為 cubic、cyclically 4-edge-connected 的平面圖；emb_y 為其嵌入"""
    budget = budget or SearchBudget()
    replay = TheoremReplay(vertex=v, targets=theorem_targets(lmap.line.n))
    _small_cycles(replay, lmap, emb_y, v)
    _shortening_phase(replay, lmap, v, budget)
    _lambda_phase(replay, y, lmap, v, budget)
    if replay.missing():
        logger.debug("[Replay] v=%d: lengths %s not covered by construction", v, replay.missing())
    return replay


def _small_cycles(replay: TheoremReplay, lmap: LineGraphMap, emb_y: Embedding, v: int):
    for tri in lmap.triangles:
        if v not in tri:
            replay.record(3, Cycle(tuple(tri)), PHASE_TRIANGLE)
            break

    if 5 not in replay.targets:
        return
    forbidden = lmap.vertex_to_edge[v]
    for face in emb_y.face_list:
        if face.length not in (4, 5) or not face.is_cycle() or forbidden in face.edges():
            continue
        lifted = lift_cycle(lmap, Cycle(face.vertices))
        if face.length == 5:
            replay.record(5, lifted, PHASE_FACE)
            return
        for a, b in lifted.edges():
            if lmap.apex(lmap.triangle_of(a, b), a, b) == v:
                continue
            try:
                replay.record(5, extend_by_lambda(lmap, lifted, [(a, b)]), PHASE_FACE)
                return
            except CollisionDetected:
                continue


def _shortening_phase(replay: TheoremReplay, lmap: LineGraphMap, v: int, budget: SearchBudget):
    n = lmap.line.n
    tri_index = min(lmap.vertex_to_edge[v])
    a, b = [x for x in lmap.triangles[tri_index] if x != v]
    e1, e2, e3 = make_edge(v, a), make_edge(v, b), make_edge(a, b)
    hamilton = hamilton_cycle_through(lmap.line, e1, e2, e3, budget)
    if hamilton is None:
        raise TheoremViolation(f"no Hamilton cycle of L(Y) - {e3} through {e1} and {e2}")
    classification = classify_triangles(lmap, hamilton)
    replay.hamilton = classification

    others = [t for t in classification.two_triangles() if t != tri_index]
    for k in range(len(others) + 1):
        length = n - 1 - k
        if length in replay.targets and length not in replay.cycles:
            cycle = shorten_by_centers(lmap, hamilton, [tri_index] + others[:k])
            replay.record(length, cycle, PHASE_SHORTENING)


def _proposition_witness(h: Graph, a: int, required: Sequence[Edge],
                         budget: SearchBudget) -> Tuple[Optional[Cycle], bool]:
    """長度在 [2a, 3a] 的環；優先取經過 v1, v2, v3 者"""
    lo, hi = 2 * a, min(3 * a, h.n)
    preferred = CycleSearch(h, require_edges=required, budget=budget)
    for length in range(lo, hi + 1):
        cycle = preferred.find(length)
        if cycle is not None:
            return cycle, True
    plain = CycleSearch(h, budget=budget)
    for length in range(lo, hi + 1):
        cycle = plain.find(length)
        if cycle is not None:
            return cycle, False
    return None, False


def _lambda_phase(replay: TheoremReplay, y: Graph, lmap: LineGraphMap, v: int,
                  budget: SearchBudget):
    pending = [l for l in replay.missing() if l >= 6]
    if not pending:
        return
    p, q = lmap.vertex_to_edge[v]
    h, index = delete_vertices(y, (p, q))
    back = {new: old for old, new in index.items()}
    degree_two = sorted(x for x in range(h.n) if h.degree(x) == 2)
    required = [make_edge(x, w) for x in degree_two[:3] for w in h.adj[x]]

    by_a: Dict[int, Optional[LambdaWitness]] = {}
    for length in pending:
        a = length // 3
        if a not in by_a:
            c_h, through = _proposition_witness(h, a, required, budget)
            if c_h is None:
                by_a[a] = None
                continue
            c_y = Cycle(tuple(back[x] for x in c_h.vertices))
            lifted = lift_cycle(lmap, c_y)
            smap = compute_s_map(lmap, lifted)
            witness = LambdaWitness(
                a=a,
                base_cycle=c_y,
                lifted=lifted,
                lam=maximal_lambda(smap),
                through_degree_two=through,
                duplication_law=duplication_law_holds(lmap, c_y, smap),
            )
            by_a[a] = witness
            replay.lambda_witnesses.append(witness)

        witness = by_a[a]
        if witness is None:
            continue
        extra = length - witness.length
        if 0 <= extra <= witness.lam.size:
            cycle = extend_by_lambda(lmap, witness.lifted, witness.lam.edges[:extra])
            replay.record(length, cycle, PHASE_LAMBDA)
