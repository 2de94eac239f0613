"""環的提升、s 值與 Λ 延伸測試"""
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import pytest

from constructions.lifting import (
    chords_of,
    compute_s_map,
    duplication_law_holds,
    extend_by_lambda,
    lambda_lower_bound,
    lift_cycle,
    maximal_lambda,
)
from graphs.cycle_engine import Cycle, CycleSearch
from graphs.errors import CollisionDetected, PreconditionViolation, UniquenessViolation
from graphs.graph_core import line_graph
from harness.fixtures import cube, dodecahedron, k4

CUBE_FACE = Cycle((0, 1, 5, 4))
CUBE_HAMILTON = Cycle((0, 1, 2, 3, 7, 6, 5, 4))


class TestLift:
    def setup_method(self):
        self.lmap = line_graph(cube().graph, require_partition=True)[1]

    def test_lift_preserves_length(self):
        lifted = lift_cycle(self.lmap, CUBE_FACE)
        assert lifted.length == 4
        assert lifted.is_valid_in(self.lmap.line)

    def test_lift_follows_edge_order(self):
        lifted = lift_cycle(self.lmap, CUBE_FACE)
        expected = [self.lmap.edge_to_vertex[e] for e in CUBE_FACE.edges()]
        assert list(lifted.vertices) == expected

    def test_lift_rejects_non_cycle(self):
        with pytest.raises(PreconditionViolation):
            lift_cycle(self.lmap, Cycle((0, 1, 2, 7)))

    def test_chords(self):
        assert chords_of(cube().graph, CUBE_FACE) == ()
        assert chords_of(cube().graph, CUBE_HAMILTON) == ((0, 3), (1, 5), (2, 6), (4, 7))


class TestSMap:
    def setup_method(self):
        self.lmap = line_graph(cube().graph, require_partition=True)[1]

    def test_face_has_distinct_s_values(self):
        smap = compute_s_map(self.lmap, lift_cycle(self.lmap, CUBE_FACE))
        assert smap.duplicated() == ()
        assert sorted(self.lmap.vertex_to_edge[s] for s in smap.values.values()) == \
            [(0, 3), (1, 2), (4, 7), (5, 6)]

    def test_hamilton_chords_appear_twice(self):
        smap = compute_s_map(self.lmap, lift_cycle(self.lmap, CUBE_HAMILTON))
        chords = chords_of(cube().graph, CUBE_HAMILTON)
        assert smap.duplicated() == tuple(sorted(self.lmap.edge_to_vertex[e] for e in chords))
        assert all(k == 2 for k in smap.multiplicity().values())
        assert duplication_law_holds(self.lmap, CUBE_HAMILTON, smap)

    def test_duplication_law_on_face(self):
        smap = compute_s_map(self.lmap, lift_cycle(self.lmap, CUBE_FACE))
        assert duplication_law_holds(self.lmap, CUBE_FACE, smap)

    def test_k4_triangle(self):
        lmap = line_graph(k4().graph, require_partition=True)[1]
        smap = compute_s_map(lmap, lift_cycle(lmap, Cycle((0, 1, 2))))
        assert sorted(lmap.vertex_to_edge[s] for s in smap.values.values()) == [(0, 3), (1, 3), (2, 3)]

    def test_facial_triangle_is_not_a_lifted_cycle(self):
        lmap = line_graph(k4().graph, require_partition=True)[1]
        with pytest.raises(UniquenessViolation):
            compute_s_map(lmap, Cycle(tuple(lmap.triangles[0])))

    def test_duplication_law_on_dodecahedron_cycles(self):
        g = dodecahedron().graph
        lmap = line_graph(g, require_partition=True)[1]
        for length in (5, 8, 9, 10, 20):
            c_h = CycleSearch(g).find(length)
            assert c_h is not None
            smap = compute_s_map(lmap, lift_cycle(lmap, c_h))
            assert duplication_law_holds(lmap, c_h, smap)


class TestLambda:
    def setup_method(self):
        self.lmap = line_graph(cube().graph, require_partition=True)[1]

    def test_lower_bound(self):
        assert lambda_lower_bound(4) == 4
        assert lambda_lower_bound(5) == 4
        assert lambda_lower_bound(6) == 5

    def test_face_lambda_is_whole_cycle(self):
        lifted = lift_cycle(self.lmap, CUBE_FACE)
        lam = maximal_lambda(compute_s_map(self.lmap, lifted))
        assert lam.size == 4
        assert lam.blocked_by == {}

    def test_hamilton_lambda_is_maximal(self):
        lifted = lift_cycle(self.lmap, CUBE_HAMILTON)
        smap = compute_s_map(self.lmap, lifted)
        lam = maximal_lambda(smap)
        assert lam.size == 8 - len(chords_of(cube().graph, CUBE_HAMILTON))
        assert lam.is_maximal(smap)
        assert len(set(lam.s_values)) == lam.size
        for blocked, keeper in lam.blocked_by.items():
            assert smap.values[blocked] == smap.values[keeper]

    def test_lambda_at_least_half(self):
        g = dodecahedron().graph
        lmap = line_graph(g, require_partition=True)[1]
        for length in (5, 9, 10, 20):
            lifted = lift_cycle(lmap, CycleSearch(g).find(length))
            lam = maximal_lambda(compute_s_map(lmap, lifted))
            assert 2 * lam.size >= lifted.length


class TestExtend:
    def setup_method(self):
        self.lmap = line_graph(cube().graph, require_partition=True)[1]
        self.lifted = lift_cycle(self.lmap, CUBE_FACE)
        self.lam = maximal_lambda(compute_s_map(self.lmap, self.lifted))

    def test_empty_extension(self):
        assert extend_by_lambda(self.lmap, self.lifted, []) == self.lifted

    def test_single_edge(self):
        longer = extend_by_lambda(self.lmap, self.lifted, self.lam.edges[:1])
        assert longer.length == 5
        assert longer.is_valid_in(self.lmap.line)

    def test_every_subset_size(self):
        for k in range(self.lam.size + 1):
            longer = extend_by_lambda(self.lmap, self.lifted, self.lam.edges[:k])
            assert longer.length == 4 + k
            assert longer.is_valid_in(self.lmap.line)

    def test_collision_on_shared_s_value(self):
        lifted = lift_cycle(self.lmap, CUBE_HAMILTON)
        smap = compute_s_map(self.lmap, lifted)
        s = self.lmap.edge_to_vertex[(0, 3)]
        sharing = [e for e in smap.order if smap.values[e] == s]
        assert len(sharing) == 2
        with pytest.raises(CollisionDetected):
            extend_by_lambda(self.lmap, lifted, sharing)

    def test_non_cycle_edge(self):
        x = self.lifted.vertices[0]
        outside = next(w for w in self.lmap.line.adj[x] if w not in self.lifted.vertices)
        with pytest.raises(PreconditionViolation):
            extend_by_lambda(self.lmap, self.lifted, [(x, outside)])
