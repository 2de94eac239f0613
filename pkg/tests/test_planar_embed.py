"""平面嵌入與 face 測試"""
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import pytest

from graphs.errors import InvalidEmbedding, NonPlanar, NoSuchFace, PreconditionViolation
from graphs.graph_core import Graph, delete_vertices
from graphs.planar_embed import (
    Embedding,
    compute_embedding,
    embedding_from_faces,
    embedding_with_face,
    exterior_face_of_H,
    face_length_profile,
    restrict_embedding,
)
from harness.fixtures import (
    cube,
    cycle_graph,
    dodecahedron,
    k4,
    octahedron,
    parallel_paths,
    path_graph,
    petersen,
    prism,
)


class TestFixtureEmbeddings:
    def test_face_counts(self):
        assert k4().embedding.face_count == 4
        assert cube().embedding.face_count == 6
        assert dodecahedron().embedding.face_count == 12

    def test_face_lengths(self):
        assert face_length_profile(k4().embedding) == [3] * 4
        assert face_length_profile(cube().embedding) == [4] * 6
        assert face_length_profile(dodecahedron().embedding) == [5] * 12

    def test_every_face_is_a_cycle(self):
        for fixture in (k4(), cube(), dodecahedron()):
            assert all(f.is_cycle() for f in fixture.embedding.face_list)

    def test_each_dart_in_exactly_one_face(self):
        emb = dodecahedron().embedding
        darts = [d for f in emb.face_list for d in f.boundary]
        assert len(darts) == len(set(darts)) == 2 * dodecahedron().graph.m


class TestComputeEmbedding:
    def test_planar_fixtures(self):
        assert compute_embedding(k4().graph).face_count == 4
        assert compute_embedding(cube().graph).face_count == 6
        assert compute_embedding(octahedron()).face_count == 8
        assert compute_embedding(prism()).face_count == 5

    def test_cycle_has_two_faces(self):
        emb = compute_embedding(cycle_graph(5))
        assert face_length_profile(emb) == [5, 5]

    def test_tree_has_one_face(self):
        emb = compute_embedding(path_graph(4))
        assert emb.face_count == 1
        assert emb.face_list[0].length == 6

    def test_petersen_is_non_planar(self):
        with pytest.raises(NonPlanar):
            compute_embedding(petersen())

    def test_disconnected_rejected(self):
        with pytest.raises(PreconditionViolation):
            compute_embedding(Graph.from_edges(4, [(0, 1), (2, 3)]))

    def test_deterministic(self):
        g = dodecahedron().graph
        assert compute_embedding(g) == compute_embedding(g)


class TestValidate:
    def test_rotation_must_match_adjacency(self):
        emb = Embedding(rotation=((1,), (0,), ()))
        with pytest.raises(InvalidEmbedding):
            emb.validate(cycle_graph(3))

    def test_euler_violation(self):
        bad = Embedding(rotation=((1, 2, 3), (0, 2, 3), (0, 1, 3), (0, 1, 2)))
        with pytest.raises(InvalidEmbedding):
            bad.validate(k4().graph)

    def test_faces_sharing_a_dart_rejected(self):
        with pytest.raises(InvalidEmbedding):
            embedding_from_faces(3, [(0, 1, 2), (0, 1, 2)])


class TestExteriorFace:
    def test_cube(self):
        fixture = cube()
        h, index = delete_vertices(fixture.graph, (0, 1))
        x = exterior_face_of_H(h, restrict_embedding(fixture.embedding, index))
        assert x.length == 6
        assert {0, 1, 2, 3} <= set(x.vertices)

    def test_dodecahedron(self):
        fixture = dodecahedron()
        h, index = delete_vertices(fixture.graph, (0, 1))
        emb = restrict_embedding(fixture.embedding, index)
        emb.validate(h)
        x = exterior_face_of_H(h, emb)
        assert x.length == 10
        assert x.is_cycle()

    def test_every_adjacent_pair_of_dodecahedron(self):
        fixture = dodecahedron()
        for pair in fixture.graph.edges():
            h, index = delete_vertices(fixture.graph, pair)
            x = exterior_face_of_H(h, restrict_embedding(fixture.embedding, index))
            degree_two = {v for v in range(h.n) if h.degree(v) == 2}
            assert degree_two <= set(x.vertices)

    def test_wrong_number_of_degree_two_vertices(self):
        c5 = cycle_graph(5)
        with pytest.raises(NoSuchFace):
            exterior_face_of_H(c5, compute_embedding(c5))


class TestEmbeddingWithFace:
    def setup_method(self):
        self.g = parallel_paths()

    def test_single_embedding_shows_four_faces(self):
        assert compute_embedding(self.g).face_count == 4

    def test_every_two_branch_cycle_is_realized(self):
        """任兩條並聯分支組成的環都能在某個嵌入中成為 face"""
        cycles = [(0, 1, 2), (0, 1, 3), (0, 1, 5, 4), (0, 2, 1, 3), (0, 2, 1, 5, 4), (0, 3, 1, 5, 4)]
        for cycle in cycles:
            emb, face = embedding_with_face(self.g, cycle)
            emb.validate(self.g)
            assert face in emb.face_list
            assert set(face.vertices) == set(cycle)
            assert face.is_cycle()

    def test_non_facial_cycle(self):
        """K4 的嵌入唯一，Hamilton 4-cycle 不是 face"""
        assert embedding_with_face(k4().graph, (0, 1, 2, 3)) is None

    def test_every_cube_face_is_realized(self):
        fixture = cube()
        for face in fixture.embedding.face_list:
            realized = embedding_with_face(fixture.graph, face.vertices)
            assert realized is not None
            assert realized[1].edges() == face.edges()

    def test_rejects_non_cycle(self):
        with pytest.raises(PreconditionViolation):
            embedding_with_face(self.g, (0, 2, 4))
        with pytest.raises(PreconditionViolation):
            embedding_with_face(self.g, (0, 1))
