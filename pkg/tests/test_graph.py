import networkx as nx
import pytest

from core.errors import (
    DisconnectedGraphError,
    DuplicateEdgeError,
    EdgeListParseError,
    EmptyEdgeListError,
    GraphError,
    InvalidOrderError,
    InvalidVertexError,
    SelfLoopError,
)
from core.graph import (
    all_trees,
    betti_number,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    format_edge_list,
    from_networkx,
    graph_from_edge_list,
    graph_from_json,
    graph_to_json,
    is_bipartite,
    is_regular,
    parse_edge_list,
    path_graph,
    random_connected_graph,
    read_edge_list,
    standard_pool,
    star_graph,
    to_networkx,
)
from core.models import CaseTag


class TestGraphFromEdgeList:
    def test_relabels_by_first_appearance(self):
        g = graph_from_edge_list([(10, 20), (20, 30)])
        assert g.n == 3
        assert g.m == 2
        assert g.labels == (10, 20, 30)
        assert g.edges == ((0, 1), (1, 2))
        assert g.degrees == (1, 2, 1)

    def test_empty(self):
        with pytest.raises(EmptyEdgeListError):
            graph_from_edge_list([])

    def test_self_loop(self):
        with pytest.raises(SelfLoopError) as info:
            graph_from_edge_list([(0, 1), (1, 1)])
        assert info.value.pair == (1, 1)

    def test_duplicate_edge_either_orientation(self):
        with pytest.raises(DuplicateEdgeError) as info:
            graph_from_edge_list([(0, 1), (1, 0)])
        assert info.value.pair == (1, 0)

    def test_disconnected_reports_original_label(self):
        with pytest.raises(DisconnectedGraphError) as info:
            graph_from_edge_list([(0, 1), (5, 6)])
        assert info.value.vertex == 5

    def test_negative_label(self):
        with pytest.raises(InvalidVertexError):
            graph_from_edge_list([(0, -1)])

    def test_graph_errors_are_value_errors(self):
        with pytest.raises(ValueError):
            graph_from_edge_list([(2, 2)])


class TestFamilies:
    def test_complete(self):
        g = complete_graph(5)
        assert (g.n, g.m) == (5, 10)
        assert is_regular(g)
        assert g.name == "K_5"
        assert g.case_tag == CaseTag.M_GT_N

    def test_cycle(self):
        g = cycle_graph(6)
        assert (g.n, g.m) == (6, 6)
        assert g.degrees == (2,) * 6
        assert g.case_tag == CaseTag.M_EQ_N

    def test_cycle_too_small(self):
        with pytest.raises(InvalidOrderError):
            cycle_graph(2)

    def test_star(self):
        g = star_graph(6)
        assert (g.n, g.m) == (6, 5)
        assert g.degrees[0] == 5
        assert g.case_tag == CaseTag.M_LT_N

    def test_path_and_bipartite(self):
        assert path_graph(4).m == 3
        k23 = complete_bipartite_graph(2, 3)
        assert (k23.n, k23.m) == (5, 6)
        assert is_bipartite(k23)

    @pytest.mark.parametrize("factory, order", [(complete_graph, 1), (star_graph, 1), (path_graph, 0)])
    def test_invalid_orders(self, factory, order):
        with pytest.raises(InvalidOrderError):
            factory(order)

    def test_random_is_reproducible(self):
        a = random_connected_graph(9, 5, seed=7)
        b = random_connected_graph(9, 5, seed=7)
        assert a == b
        assert a.m == 8 + 5

    def test_random_extra_edges_capped_by_complete_graph(self):
        g = random_connected_graph(5, 100, seed=1)
        assert g.m == 10


class TestInvariants:
    def test_betti_number(self, c4, k4, p5):
        assert betti_number(c4) == 1
        assert betti_number(k4) == 3
        assert betti_number(p5) == 0

    def test_bipartite(self, c3, c4):
        assert not is_bipartite(c3)
        assert is_bipartite(c4)

    def test_arc_index_pairs_inverse_arcs(self, k4):
        arcs = k4.arc_index
        assert len(arcs) == 2 * k4.m
        for j, (u, v) in enumerate(k4.edges):
            assert arcs.arcs[2 * j] == (u, v)
            assert arcs.arcs[2 * j + 1] == (v, u)
            assert arcs.inverse(2 * j) == 2 * j + 1
            assert arcs.index((v, u)) == 2 * j + 1
            assert arcs.origin(2 * j + 1) == v
            assert arcs.terminus(2 * j + 1) == u


class TestTreesAndPool:
    def test_tree_counts(self):
        trees = all_trees(7)
        # 1, 1, 2, 3, 6, 11 arbres non isomorphes pour n = 2..7
        assert len(trees) == 24
        assert all(t.m == t.n - 1 for t in trees)

    def test_standard_pool(self):
        pool = standard_pool(random_count=10)
        names = {g.name for g in pool}
        assert {"C_3", "C_10", "K_2", "K_6", "S_2", "S_10"} <= names
        assert len(pool) == 24 + 8 + 5 + 9 + 10
        assert {g.case_tag for g in pool} == set(CaseTag)

    def test_pool_is_seeded(self):
        a = standard_pool(seed=3, random_count=5)
        b = standard_pool(seed=3, random_count=5)
        assert [g.edges for g in a] == [g.edges for g in b]


class TestEdgeListIO:
    def test_parse_skips_comments_and_blank_lines(self):
        g = parse_edge_list("# triangle\n0 1\n\n1 2\n  2 0  \n")
        assert (g.n, g.m) == (3, 3)

    def test_parse_error_reports_line(self):
        with pytest.raises(EdgeListParseError) as info:
            parse_edge_list("0 1\n1 x\n")
        assert info.value.line_number == 2

    def test_read_edge_list(self, tmp_path):
        path = tmp_path / "square.txt"
        path.write_text(format_edge_list(cycle_graph(4)), encoding='utf-8')
        g = read_edge_list(path)
        assert (g.n, g.m) == (4, 4)
        assert g.degrees == (2, 2, 2, 2)
        assert g.name == "square"

    def test_json(self, petersen):
        data = graph_to_json(petersen)
        assert data["n"] == 10 and data["m"] == 15
        assert graph_from_json(data) == petersen

    def test_json_declared_size_mismatch(self):
        with pytest.raises(GraphError):
            graph_from_json({"n": 3, "m": 2, "edges": [[0, 1], [1, 2], [2, 0]]})

    def test_json_vertex_out_of_range(self):
        with pytest.raises(InvalidVertexError):
            graph_from_json({"n": 2, "edges": [[0, 2]]})


class TestNetworkX:
    def test_to_networkx(self, k4):
        graph = to_networkx(k4)
        assert graph.number_of_nodes() == 4
        assert graph.number_of_edges() == 6

    def test_from_networkx(self):
        g = from_networkx(nx.petersen_graph(), name="petersen")
        assert (g.n, g.m) == (10, 15)
        assert is_regular(g)
