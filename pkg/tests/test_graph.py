import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planar4c.generate import GenConfig, gen_maximal_planar, gen_planar
from planar4c.graph import (
    EmbeddingError,
    GraphFormatError,
    PlanarGraph,
    enumerate_faces,
    euler_validate,
    format_graph,
    parse_added_edges,
    parse_graph,
)


def face_count_by_permutation(g: PlanarGraph) -> int:
    """Faces as orbits of dart -> (reverse, then rotate), written without the library tracer."""
    succ = {}
    for v, ring in g.rotation.items():
        d = len(ring)
        for k in range(d):
            succ[(ring[k], v)] = (v, ring[(k - 1) % d])
    seen, orbits = set(), 0
    for dart in succ:
        if dart in seen:
            continue
        orbits += 1
        while dart not in seen:
            seen.add(dart)
            dart = succ[dart]
    return orbits + sum(1 for v in g.nodes if not g.rotation[v])


class TestParse:
    def test_fig1a(self, fig1a):
        assert fig1a.nodes == (1, 2, 3, 5, 7)
        assert fig1a.edges == ((1, 2), (1, 5), (2, 3), (2, 7), (3, 5), (3, 7), (5, 7))
        assert (fig1a.num_nodes, fig1a.num_edges) == (5, 7)

    def test_single_node(self):
        g = parse_graph("p planar 1 0\n")
        assert g.nodes == (1,)
        faces = enumerate_faces(g)
        assert len(faces) == 1 and faces[0].is_outer and len(faces[0]) == 0

    def test_rotation_with_non_neighbor(self):
        text = "p planar 3 2\ne 1 2\ne 2 3\nr 1 1 3\nr 2 2 1 3\nr 3 1 2\n"
        with pytest.raises(EmbeddingError, match="non-neighbour"):
            parse_graph(text)

    @pytest.mark.parametrize("text, match", [
        ("e 1 2\n", "before"),
        ("p planar 2 1\ne 1 x\n", "non-integer"),
        ("p planar 2 2\ne 1 2\ne 2 1\n", "duplicate"),
        ("p planar 2 1\ne 1 1\n", "self-loop"),
        ("p planar 2 1\nq 1 2\n", "unknown line"),
        ("p planar 2 2\ne 1 2\n", "declares 2 edges"),
        ("p planar 3 2\ne 1 2\ne 2 3\nr 1 1 2\n", "missing"),
        ("c only a comment\n", "header"),
        ("p planar 2 1\np planar 2 1\ne 1 2\n", "second header"),
        ("p planar 4 2\ne 1 2\ne 3 4\n", "connected components"),
    ])
    def test_rejects(self, text, match):
        with pytest.raises(GraphFormatError, match=match):
            parse_graph(text)

    def test_assumed_rotation_failing_euler_reports_value(self):
        # Fig. 1(a) without rotation lines: ascending order is a genus-1 embedding
        text = "p planar 5 7\ne 1 2\ne 1 5\ne 2 3\ne 2 7\ne 3 5\ne 3 7\ne 5 7\n"
        with pytest.raises(EmbeddingError, match=r"= 0, expected 2"):
            parse_graph(text)

    def test_assumed_rotation_accepts_trees(self, path3):
        g = parse_graph("p planar 3 2\ne 1 2\ne 2 3\n")
        assert g == path3

    def test_comments_ignored_and_added_edges_read(self, fig1a):
        text = "c added e 1 3\n" + format_graph(fig1a)
        assert parse_graph(text) == fig1a
        assert parse_added_edges(text) == [(1, 3)]

    def test_format_is_bit_exact(self, fig1a, fig1a_text):
        body = fig1a_text.split("\n", 1)[1]
        assert format_graph(fig1a) == body


class TestFaces:
    def test_k3(self, k3):
        faces = enumerate_faces(k3)
        assert len(faces) == 2
        assert sorted(f.is_outer for f in faces) == [False, True]
        assert all(len(f) == 3 for f in faces)

    def test_fig1b(self, fig1b):
        faces = enumerate_faces(fig1b.graph)
        bounded = sorted(tuple(sorted(f.nodes)) for f in faces if not f.is_outer)
        assert bounded == [(1, 2, 3), (1, 3, 5), (2, 3, 7), (3, 5, 7)]
        outer = [f for f in faces if f.is_outer]
        assert len(faces) == 5 and sorted(outer[0].nodes) == [1, 2, 5, 7]

    def test_single_edge(self):
        faces = enumerate_faces(PlanarGraph.from_edges([(1, 2)]))
        assert len(faces) == 1 and len(faces[0]) == 2 and faces[0].is_outer

    def test_outer_is_longest_walk(self, fig1a):
        faces = enumerate_faces(fig1a)
        outer = next(f for f in faces if f.is_outer)
        assert len(outer) == max(len(f) for f in faces)
        assert outer.nodes == (1, 2, 7, 5)


class TestEuler:
    def test_fig1a(self, fig1a):
        r = euler_validate(fig1a)
        assert (r.vertices, r.edges, r.faces, r.characteristic, r.holds) == (5, 7, 4, 2, True)

    def test_k4_planar(self):
        r = euler_validate(gen_maximal_planar(GenConfig(4)))
        assert r.faces == 4 and r.holds

    def test_k4_genus_one(self):
        k4 = gen_maximal_planar(GenConfig(4))
        rot = dict(k4.rotation)
        a, b, c = rot[1]
        rot[1] = (b, a, c)
        twisted = PlanarGraph.from_rotation(rot)
        r = euler_validate(twisted)
        assert face_count_by_permutation(twisted) == r.faces == 2
        assert r.characteristic == 0 and not r.holds
        with pytest.raises(EmbeddingError):
            parse_graph(format_graph(twisted))

    def test_never_mutates(self, fig1a):
        before = dict(fig1a.rotation)
        euler_validate(fig1a)
        assert dict(fig1a.rotation) == before


@settings(max_examples=60, deadline=None)
@given(n=st.integers(3, 30), seed=st.integers(0, 2**64 - 1), deletions=st.integers(0, 6))
def test_face_walk_properties(n, seed, deletions):
    cfg = GenConfig(n, seed, min(deletions, GenConfig(n).max_deletions))
    g = gen_planar(cfg)
    faces = enumerate_faces(g)
    darts = [d for f in faces for d in f.boundary]
    assert len(darts) == len(set(darts)) == 2 * g.num_edges
    assert sum(f.is_outer for f in faces) == 1
    assert len(faces) == face_count_by_permutation(g)
    assert euler_validate(g).characteristic == 2
    again = parse_graph(format_graph(g))
    assert again == g
    assert enumerate_faces(again) == faces
