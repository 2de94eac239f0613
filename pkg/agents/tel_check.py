"""
Three Edge Lemma 檢查
- TelOracleCheck：每個 H 的外部 face X 上，取 v1, v2, v3 各一條邊，
  以窮舉搜尋找 TEL 見證，並檢查計數鏈 ℓ(C) ≥ 3|V(H) - V(C)| + 2。
- TelCatalogCheck：2-connected 平面圖在任一嵌入中出現的每個 face、face 上每組三條邊都要有見證。
兩者都以 WitnessValidator 獨立重算分量的 attachment。
"""

from itertools import combinations
from typing import List, Optional, Set, Tuple

from agents.base_check import BaseCheck, CheckOutcome, DerivedHCheck, RunOptions, verdict_of
from config.settings import Settings
from graphs.connectivity import is_k_connected
from graphs.cycle_engine import Cycle, CycleSearch, SearchBudget, tel_witness
from graphs.graph_core import Edge, Graph, make_edge
from graphs.planar_embed import Embedding, Face, embedding_with_face
from harness.instance import GraphInstance
from harness.witness import WitnessLedger, WitnessValidator


def attachment_bounds_hold(validator: WitnessValidator, cycle: Cycle, x_vertices: Set[int]) -> bool:
    for comp, attached in validator.attachments(cycle):
        if len(attached) > 3:
            return False
        if comp & x_vertices and len(attached) > 2:
            return False
    return True


def counting_chain_holds(order: int, length: int) -> bool:
    return length >= 3 * (order - length) + 2


def degree_two_edges(h: Graph, vertices: List[int]) -> List[Edge]:
    """每個頂點取一條尚未選過的最小邊"""
    chosen: List[Edge] = []
    for x in vertices:
        options = sorted(make_edge(x, w) for w in h.adj[x])
        chosen.append(next(e for e in options if e not in chosen))
    return chosen


class TelOracleCheck(DerivedHCheck):

    def __init__(self, settings: Optional[Settings] = None):
        settings = settings or Settings()
        super().__init__(settings.CHECK_REGISTRY["tel-oracle"])

    def _execute(self, instance: GraphInstance, options: RunOptions) -> CheckOutcome:
        ledger = WitnessLedger()
        pairs = instance.adjacent_pairs(options.max_pairs)
        failures = []
        lengths = []
        for pair in pairs:
            derived = instance.derive_h(pair)
            h = derived.graph
            x = derived.exterior_face()
            t, y, s = degree_two_edges(h, derived.degree_two()[:3])
            witness = tel_witness(h, derived.embedding, x, t, y, s, self.new_budget(options))
            validator = ledger.validator(h, self.host_id(instance, pair))
            ok = (
                validator.accept("tel-oracle", witness, through=(t, y, s))
                and attachment_bounds_hold(validator, witness, set(x.vertices))
                and counting_chain_holds(h.n, witness.length)
            )
            lengths.append(witness.length)
            if not ok:
                failures.append({"pair": list(pair), "length": witness.length, "order": h.n})

        return CheckOutcome(
            verdicts={"tel-oracle": verdict_of(not failures)},
            details={
                "pairs": len(pairs),
                "witness_lengths": sorted(set(lengths)),
                "failures": failures[:10],
            },
            witnesses=ledger.summary(),
        )


def facial_cycles(g: Graph, emb: Embedding, budget: SearchBudget) -> List[Tuple[Embedding, Face]]:
    """
    每個在某個平面嵌入中是 face 的環，配上一個實現它的嵌入。
    3-connected 圖的嵌入唯一，直接取 emb 的 face；否則逐一測試 g 的所有環。
    """
    if g.n > 3 and is_k_connected(g, 3):
        return [(emb, face) for face in emb.face_list]
    found = []
    search = CycleSearch(g, budget=budget)
    for length in range(3, g.n + 1):
        for cycle in search.iter_cycles(length):
            realized = embedding_with_face(g, cycle.vertices)
            if realized is not None:
                found.append(realized)
    return found


class TelCatalogCheck(BaseCheck):

    def __init__(self, settings: Optional[Settings] = None):
        settings = settings or Settings()
        super().__init__(settings.CHECK_REGISTRY["tel-catalog"])

    def applies_to(self, instance: Optional[GraphInstance]) -> Optional[str]:
        if instance is None:
            return "needs a plane graph"
        if instance.graph.n < 3 or not is_k_connected(instance.graph, 2):
            return "not 2-connected"
        if not instance.planar:
            return "not planar"
        return None

    def _execute(self, instance: GraphInstance, options: RunOptions) -> CheckOutcome:
        g = instance.graph
        ledger = WitnessLedger()
        validator = ledger.validator(g, instance.graph6)
        catalog = facial_cycles(g, instance.embedding, self.new_budget(options))
        triples = 0
        failures = []
        for face_index, (emb, face) in enumerate(catalog):
            x_vertices = set(face.vertices)
            for t, y, s in combinations(sorted(face.edges()), 3):
                triples += 1
                witness = tel_witness(g, emb, face, t, y, s, self.new_budget(options))
                if not (validator.accept("tel-catalog", witness, through=(t, y, s))
                        and attachment_bounds_hold(validator, witness, x_vertices)):
                    failures.append({"face": list(face.vertices), "edges": [list(t), list(y), list(s)]})

        return CheckOutcome(
            verdicts={"tel-catalog": verdict_of(not failures)},
            details={
                "faces": len(catalog),
                "embeddings": len({emb for emb, _ in catalog}),
                "triples": triples,
                "failures": failures[:10],
            },
            witnesses=ledger.summary(),
        )
