"""facial triangle 分類與縮短測試"""
import os
import sys
from itertools import islice

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import pytest

from constructions.triangles import classify_triangles, shorten_by_centers
from graphs.cycle_engine import Cycle, CycleSearch
from graphs.errors import NotCubic, NotHamiltonian, NotTwoTriangle
from graphs.graph_core import line_graph
from harness.fixtures import cube, cycle_graph, dodecahedron, k4


def hamilton_cycles(lmap, limit=None):
    line = lmap.line
    return list(islice(CycleSearch(line).iter_cycles(line.n), limit))


def icosidodecahedron_map():
    return line_graph(dodecahedron().graph, require_partition=True)[1]


class TestClassification:
    def setup_method(self):
        self.octa = line_graph(k4().graph, require_partition=True)[1]
        self.cubocta = line_graph(cube().graph, require_partition=True)[1]

    def test_octahedron_all_hamilton_cycles(self):
        cycles = hamilton_cycles(self.octa)
        assert cycles
        for c in cycles:
            assert classify_triangles(self.octa, c).holds()

    def test_identities_across_fixtures(self):
        """八面體、cuboctahedron、icosidodecahedron 合計至少 50 個 Hamilton cycle"""
        total = 0
        for lmap, limit in ((self.octa, None), (self.cubocta, 25), (icosidodecahedron_map(), 25)):
            for c in hamilton_cycles(lmap, limit):
                result = classify_triangles(lmap, c)
                assert all(result.identities().values()), result.tau
                total += 1
        assert total >= 50

    def test_cuboctahedron_specialization(self):
        """n = 12：2τ0 + τ1 = 4 且 τ2 = 4 + τ0"""
        for c in hamilton_cycles(self.cubocta, 40):
            t0, t1, t2 = classify_triangles(self.cubocta, c).tau
            assert 2 * t0 + t1 == 4
            assert t2 == 4 + t0

    def test_centers_belong_to_their_triangles(self):
        c = hamilton_cycles(self.cubocta, 1)[0]
        result = classify_triangles(self.cubocta, c)
        for y, center in result.centers.items():
            assert center in self.cubocta.triangles[y]
            assert result.classes[y] == 2
        assert len(result.two_triangles()) == result.tau[2]

    def test_non_hamilton_cycle_rejected(self):
        triangle = Cycle(tuple(self.octa.triangles[0]))
        with pytest.raises(NotHamiltonian):
            classify_triangles(self.octa, triangle)

    def test_non_cubic_base_rejected(self):
        _, lmap = line_graph(cycle_graph(5))
        with pytest.raises(NotCubic):
            classify_triangles(lmap, Cycle((0, 1, 2, 3, 4)))


class TestShortening:
    def setup_method(self):
        self.lmap = line_graph(cube().graph, require_partition=True)[1]
        self.hamilton = hamilton_cycles(self.lmap, 1)[0]
        self.result = classify_triangles(self.lmap, self.hamilton)

    def test_empty_choice_keeps_cycle(self):
        assert shorten_by_centers(self.lmap, self.hamilton, []) == self.hamilton

    def test_remove_all_centers(self):
        chosen = self.result.two_triangles()
        shorter = shorten_by_centers(self.lmap, self.hamilton, chosen)
        assert shorter.length == self.lmap.line.n - len(chosen)
        assert shorter.is_valid_in(self.lmap.line)

    def test_every_prefix_is_a_cycle(self):
        chosen = self.result.two_triangles()
        for k in range(len(chosen) + 1):
            shorter = shorten_by_centers(self.lmap, self.hamilton, chosen[:k])
            assert shorter.length == 12 - k
            assert shorter.is_valid_in(self.lmap.line)
            removed = {self.result.centers[y] for y in chosen[:k]}
            assert not removed & set(shorter.vertices)

    def test_not_two_triangle(self):
        other = next(y for y, c in enumerate(self.result.classes) if c != 2)
        with pytest.raises(NotTwoTriangle):
            shorten_by_centers(self.lmap, self.hamilton, [other])

    def test_unknown_triangle(self):
        with pytest.raises(NotTwoTriangle):
            shorten_by_centers(self.lmap, self.hamilton, [99])
