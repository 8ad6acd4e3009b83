import random

import pytest
from hypothesis import given, settings

from oracles import closure, digraphs, random_digraph
from pathdiv.graph import (
    AnnouncementDigraph,
    Digraph,
    DomainError,
    GraphError,
    build,
    converse,
    from_adjacency_matrix,
    is_arborescence,
    reachable_from,
    to_adjacency_matrix,
    to_dot,
    union,
)


def G(vertices, arcs):
    return Digraph(frozenset(vertices), frozenset(arcs))


class TestBuild:
    def test_minimal_arc(self):
        assert build({1, 2}, [(1, 2)]) == G({1, 2}, {(1, 2)})

    def test_duplicates_collapse_and_endpoints_added(self):
        assert build(set(), [(1, 2), (1, 2)]) == G({1, 2}, {(1, 2)})

    def test_self_loop_rejected(self):
        with pytest.raises(GraphError, match="self-loop at AS3"):
            build(set(), [(3, 3)])

    @pytest.mark.parametrize("bad", [0, -5, 4294967296])
    def test_asn_range(self, bad):
        with pytest.raises(GraphError):
            build({bad})

    def test_largest_4byte_asn(self):
        assert 4294967295 in build({4294967295}).vertices

    def test_direct_construction_checks_endpoints(self):
        with pytest.raises(GraphError):
            Digraph(frozenset({1}), frozenset({(1, 2)}))

    def test_immutable(self):
        g = build({1, 2}, [(1, 2)])
        with pytest.raises(AttributeError):
            g.arcs = frozenset()

    def test_announcement_origin_must_be_vertex(self):
        with pytest.raises(GraphError):
            AnnouncementDigraph(5, build({1, 2}))


class TestConverse:
    def test_definition(self):
        g = build({1, 2, 3}, [(1, 2), (2, 3)])
        assert converse(g) == G({1, 2, 3}, {(2, 1), (3, 2)})

    def test_empty(self):
        assert converse(build()) == build()

    def test_random_six_vertex_involution(self):
        g = random_digraph(random.Random(7), 6)
        assert converse(converse(g)).arcs == g.arcs
        assert converse(converse(g)).vertices == g.vertices

    @given(digraphs())
    def test_preserves_counts(self, g):
        c = converse(g)
        assert len(c.vertices) == len(g.vertices)
        assert len(c.arcs) == len(g.arcs)
        assert converse(c) == g


class TestUnion:
    def test_disjoint_arcs(self):
        g = union(build({1, 2}, [(1, 2)]), build({2, 3}, [(2, 3)]))
        assert g == G({1, 2, 3}, {(1, 2), (2, 3)})

    @given(digraphs(), digraphs(), digraphs())
    def test_algebra(self, a, b, c):
        assert union(a, a) == a
        assert union(a, b) == union(b, a)
        assert union(union(a, b), c) == union(a, union(b, c))


class TestReachable:
    def test_simple(self):
        assert reachable_from(build({1, 2, 3}, [(1, 2)]), 1) == {1, 2}

    def test_isolated(self):
        assert reachable_from(build({1}), 1) == {1}

    def test_missing_vertex(self):
        with pytest.raises(DomainError):
            reachable_from(build({1}), 2)

    def test_against_floyd_warshall(self):
        rng = random.Random(3)
        for _ in range(200):
            g = random_digraph(rng, rng.randint(1, 8), p=rng.random() * 0.5)
            expected = closure(g.vertices, g.arcs)
            for v in g.vertices:
                assert reachable_from(g, v) == expected[v]


class TestArborescence:
    def test_star(self):
        assert is_arborescence(build({1, 2, 3}, [(1, 2), (1, 3)]), 1)

    def test_in_degree_two(self):
        assert not is_arborescence(build({1, 2, 3}, [(1, 2), (1, 3), (2, 3)]), 1)

    def test_unreachable(self):
        assert not is_arborescence(build({1, 2}), 1)

    def test_arc_into_root(self):
        assert not is_arborescence(build({1, 2}, [(1, 2), (2, 1)]), 1)

    def test_cycle_plus_root(self):
        # every non-root has in-degree 1 but 2 and 3 form a cycle away from root
        assert not is_arborescence(build({1, 2, 3}, [(2, 3), (3, 2)]), 1)

    def test_missing_root(self):
        with pytest.raises(DomainError):
            is_arborescence(build({1}), 9)

    @settings(max_examples=200)
    @given(digraphs(max_vertices=7))
    def test_implies_tree_shape(self, g):
        for root in g.vertices:
            if is_arborescence(g, root):
                assert len(g.arcs) == len(g.vertices) - 1
                assert reachable_from(g, root) == g.vertices


class TestAdjacencyMatrix:
    def test_single_arc(self):
        assert to_adjacency_matrix(build({1, 2}, [(1, 2)])) == ([1, 2], [[0, 1], [0, 0]])

    def test_rows_are_tails(self):
        order, m = to_adjacency_matrix(build({5, 9, 2}, [(9, 2)]))
        assert order == [2, 5, 9]
        assert m[2][0] == 1 and sum(map(sum, m)) == 1

    def test_no_arcs(self):
        _, m = to_adjacency_matrix(build({1, 2, 3}))
        assert m == [[0] * 3] * 3

    def test_from_matrix(self):
        assert from_adjacency_matrix([1, 2], [[0, 1], [0, 0]]) == G({1, 2}, {(1, 2)})

    def test_nonzero_diagonal(self):
        with pytest.raises(GraphError, match="nonzero diagonal at AS1"):
            from_adjacency_matrix([1, 2], [[1, 0], [0, 0]])

    def test_dimension_mismatch(self):
        with pytest.raises(GraphError, match="dimension mismatch"):
            from_adjacency_matrix([1, 2, 3], [[0, 1], [0, 0]])

    def test_bad_entry_position(self):
        with pytest.raises(GraphError, match="row 2, column 1"):
            from_adjacency_matrix([1, 2], [[0, 1], [2, 0]])

    @given(digraphs(max_vertices=8))
    def test_round_trip(self, g):
        assert from_adjacency_matrix(*to_adjacency_matrix(g)) == g


class TestDot:
    def test_one_edge_line(self):
        text = to_dot(build({1, 2}, [(1, 2)]))
        edges = [line for line in text.splitlines() if "->" in line]
        assert edges == ["  1 -> 2;"]
        assert 'label="AS1"' in text and 'label="AS2"' in text

    def test_empty(self):
        assert to_dot(build()) == 'digraph "G" {\n}\n'

    def test_deterministic_and_sorted(self):
        g = build({30, 4, 17}, [(30, 4), (4, 17), (17, 30)])
        a, b = to_dot(g), to_dot(build({17, 4, 30}, [(17, 30), (30, 4), (4, 17)]))
        assert a == b
        edges = [line for line in a.splitlines() if "->" in line]
        assert edges == sorted(edges, key=lambda l: tuple(int(x) for x in l.strip(" ;").split(" -> ")))

    def test_highlight(self):
        text = to_dot(build({1, 2}, [(1, 2)]), highlight=2)
        node2 = next(l for l in text.splitlines() if l.startswith("  2 ["))
        node1 = next(l for l in text.splitlines() if l.startswith("  1 ["))
        assert "fillcolor" in node2 and "fillcolor" not in node1

    def test_highlight_absent_vertex_ignored(self):
        g = build({1, 2}, [(1, 2)])
        assert to_dot(g, highlight=99) == to_dot(g)
