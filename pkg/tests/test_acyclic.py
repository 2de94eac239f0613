"""無環生成子有向圖測試"""
import os
import random
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import networkx as nx
import pytest

from constructions.acyclic import (
    acyclic_spanning_subdigraph,
    all_digraphs,
    check_postconditions,
    is_acyclic,
    random_digraph,
    random_digraphs,
    removal_order,
)
from graphs.errors import LoopPresent
from graphs.graph_core import Digraph


class TestRemovalOrder:
    def test_directed_triangle(self):
        d = Digraph(n=3, arcs=((0, 1), (1, 2), (2, 0)))
        assert removal_order(d) == [0, 2, 1]

    def test_loop_rejected(self):
        with pytest.raises(LoopPresent):
            removal_order(Digraph(n=2, arcs=((0, 1), (1, 1))))

    def test_order_is_permutation(self):
        rng = random.Random(7)
        d = random_digraph(rng, 8, 0.5)
        assert sorted(removal_order(d)) == list(range(8))


class TestAcyclicSubdigraph:
    def test_directed_triangle(self):
        d = Digraph(n=3, arcs=((0, 1), (1, 2), (2, 0)))
        sub = acyclic_spanning_subdigraph(d)
        assert sub.arcs == ((1, 2), (2, 0))
        assert check_postconditions(d, sub).passed

    def test_single_vertex(self):
        d = Digraph(n=1, arcs=())
        sub = acyclic_spanning_subdigraph(d)
        assert sub.arcs == () and sub.n == 1

    def test_parallel_arcs_handled_individually(self):
        d = Digraph(n=2, arcs=((0, 1), (0, 1), (1, 0)))
        sub = acyclic_spanning_subdigraph(d)
        outcome = check_postconditions(d, sub)
        assert outcome.passed
        assert len(set(sub.arcs)) == 1

    def test_loop_rejected_before_work(self):
        with pytest.raises(LoopPresent):
            acyclic_spanning_subdigraph(Digraph(n=1, arcs=((0, 0),)))

    def test_random_digraphs(self):
        """固定 seed 的 10000 個隨機有向圖"""
        for d in random_digraphs(10000, 9, seed=1):
            outcome = check_postconditions(d, acyclic_spanning_subdigraph(d))
            assert outcome.passed, (d.n, d.arcs, outcome)

    def test_exhaustive_small(self):
        count = 0
        for d in all_digraphs(3):
            count += 1
            assert check_postconditions(d, acyclic_spanning_subdigraph(d)).passed
        # n = 1, 2, 3：1 + 3² + 3⁶
        assert count == 1 + 9 + 729

    def test_exhaustive_four_vertices_simple(self):
        for d in all_digraphs(4, max_parallel=1):
            assert check_postconditions(d, acyclic_spanning_subdigraph(d)).passed

    def test_networkx_agrees_on_acyclicity(self):
        for d in random_digraphs(300, 7, seed=11):
            sub = acyclic_spanning_subdigraph(d)
            assert nx.is_directed_acyclic_graph(sub.to_networkx())


class TestPostconditions:
    def test_is_acyclic(self):
        assert is_acyclic(Digraph(n=3, arcs=((0, 1), (1, 2))))
        assert not is_acyclic(Digraph(n=2, arcs=((0, 1), (1, 0))))

    def test_detects_degree_violation(self):
        d = Digraph(n=2, arcs=((0, 1),))
        outcome = check_postconditions(d, Digraph(n=2, arcs=()))
        assert outcome.degree_violations == [0]
        assert not outcome.passed

    def test_detects_foreign_arc(self):
        d = Digraph(n=2, arcs=((0, 1),))
        outcome = check_postconditions(d, Digraph(n=2, arcs=((1, 0),)))
        assert not outcome.arc_subset

    def test_detects_cycle(self):
        d = Digraph(n=2, arcs=((0, 1), (1, 0)))
        outcome = check_postconditions(d, d)
        assert not outcome.acyclic


class TestGenerators:
    def test_random_digraphs_reproducible(self):
        first = [d.arcs for d in random_digraphs(20, 6, seed=3)]
        second = [d.arcs for d in random_digraphs(20, 6, seed=3)]
        assert first == second

    def test_random_digraphs_have_no_loops(self):
        for d in random_digraphs(200, 6, seed=5):
            assert not d.loops()
            assert 1 <= d.n <= 6
