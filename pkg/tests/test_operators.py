import numpy as np
import pytest
from numpy.testing import assert_allclose, assert_array_equal

from core.graph import complete_graph, cycle_graph, star_graph
from core.operators import (
    adjacency_matrix,
    build_walk_operators,
    degree_matrix,
    edge_matrix,
    grover_matrix,
    laplacian,
    orthogonality_defect,
    positive_support,
    transition_matrix,
)


class TestGroverMatrix:
    def test_k2_is_the_swap(self):
        assert_array_equal(grover_matrix(complete_graph(2)), [[0.0, 1.0], [1.0, 0.0]])

    @pytest.mark.parametrize("g", [cycle_graph(3), complete_graph(5), star_graph(6)], ids=lambda g: g.name)
    def test_orthogonal(self, g):
        u = grover_matrix(g)
        assert u.shape == (2 * g.m, 2 * g.m)
        assert orthogonality_defect(u) <= 1e-12

    def test_rows_sum_to_one(self, k5):
        assert_allclose(grover_matrix(k5).sum(axis=1), np.ones(2 * k5.m), atol=1e-12)

    def test_entries(self, k4):
        u = grover_matrix(k4)
        arcs = k4.arc_index
        e = arcs.index((0, 1))
        assert u[e, arcs.index((2, 0))] == pytest.approx(2 / 3)
        assert u[e, arcs.index((1, 0))] == pytest.approx(2 / 3 - 1)
        # t(f) ≠ o(e)
        assert u[e, arcs.index((2, 3))] == 0.0

    def test_cycle_walk_is_a_permutation(self, c3):
        u = grover_matrix(c3)
        assert set(np.unique(u)) <= {0.0, 1.0}
        assert_array_equal(u.sum(axis=0), np.ones(6))

    def test_read_only(self, c3):
        with pytest.raises(ValueError):
            grover_matrix(c3)[0, 0] = 1.0


class TestPositiveSupport:
    def test_matches_edge_matrix_when_min_degree_is_two(self, k4):
        assert_array_equal(positive_support(grover_matrix(k4)), edge_matrix(k4))

    def test_triangle_closed_walks(self, c3):
        support = positive_support(grover_matrix(c3))
        assert int(round(np.trace(np.linalg.matrix_power(support, 3)))) == 6

    def test_leaf_keeps_backtracking_entry(self, s5):
        support = positive_support(grover_matrix(s5))
        b = edge_matrix(s5)
        arcs = s5.arc_index
        e = arcs.index((1, 0))
        assert support[e, arcs.inverse(e)] == 1.0
        assert b[e, arcs.inverse(e)] == 0.0

    def test_threshold(self):
        assert_array_equal(positive_support([[1e-13, 0.5], [-0.5, 0.0]]), [[0.0, 1.0], [0.0, 0.0]])


class TestVertexMatrices:
    def test_transition_is_stochastic(self, petersen):
        assert_allclose(transition_matrix(petersen).sum(axis=1), np.ones(10))

    def test_transition_is_d_inverse_a(self, s5):
        d = degree_matrix(s5)
        a = adjacency_matrix(s5)
        assert_allclose(transition_matrix(s5), np.linalg.inv(d) @ a)

    def test_laplacian_of_c4(self, c4):
        expected = [
            [2, -1, 0, -1],
            [-1, 2, -1, 0],
            [0, -1, 2, -1],
            [-1, 0, -1, 2],
        ]
        assert_array_equal(laplacian(c4), expected)

    def test_build_walk_operators(self, k4):
        ops = build_walk_operators(k4)
        assert ops.graph is k4
        assert ops.u_matrix.shape == (12, 12)
        assert ops.edge.shape == (12, 12)
        assert ops.p_matrix.shape == ops.laplacian.shape == (4, 4)
        assert_array_equal(ops.d_matrix, 3 * np.eye(4))
