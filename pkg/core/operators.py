"""
Matrices denses d'un graphe : matrice de Grover U_{2m}, support positif U⁺,
matrice d'arêtes (non-backtracking), transition P_n, adjacence A_n,
degrés D_n et laplacien Δ_n.
Les lignes/colonnes de U suivent l'ordre canonique des arcs (2j, 2j+1).
"""

import logging

import numpy as np

from config import Config
from .models import Graph, Matrix, WalkOperators

logger = logging.getLogger(__name__)


def _frozen(matrix: np.ndarray) -> Matrix:
    matrix.setflags(write=False)
    return matrix


def grover_matrix(g: Graph) -> Matrix:
    """
    U[e][f] = 2/d_{t(f)}       si t(f) = o(e) et f ≠ e⁻¹
            = 2/d_{t(f)} - 1   si f = e⁻¹
            = 0                sinon
    """
    arcs = g.arc_index
    size = len(arcs)
    u = np.zeros((size, size), dtype=np.float64)
    for e in range(size):
        w = arcs.origin(e)
        coin = 2.0 / g.degrees[w]
        # arcs f = (x, w) entrant en o(e)
        for x in g.adjacency[w]:
            u[e, arcs.index((x, w))] = coin
        u[e, arcs.inverse(e)] = coin - 1.0
    return _frozen(u)


def positive_support(f, threshold: float = Config.SUPPORT_THRESHOLD) -> Matrix:
    """F⁺[i][j] = 1 si F[i][j] > 0 (au seuil d'arrondi près)."""
    f = np.asarray(f, dtype=np.float64)
    return _frozen((f > threshold).astype(np.float64))


def edge_matrix(g: Graph) -> Matrix:
    """
    Matrice d'arêtes de Perron-Frobenius : B[e][f] = 1 si t(f) = o(e) et f ≠ e⁻¹.
    Égale à positive_support(U) quand tous les degrés sont ≥ 2 ; en une feuille
    2/1 - 1 = 1 > 0 ferait entrer un retour arrière dans U⁺.
    """
    arcs = g.arc_index
    size = len(arcs)
    b = np.zeros((size, size), dtype=np.float64)
    for e in range(size):
        w = arcs.origin(e)
        for x in g.adjacency[w]:
            f = arcs.index((x, w))
            if f != arcs.inverse(e):
                b[e, f] = 1.0
    return _frozen(b)


def adjacency_matrix(g: Graph) -> Matrix:
    a = np.zeros((g.n, g.n), dtype=np.float64)
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1.0
    return _frozen(a)


def degree_matrix(g: Graph) -> Matrix:
    return _frozen(np.diag(np.asarray(g.degrees, dtype=np.float64)))


def transition_matrix(g: Graph) -> Matrix:
    """P[u][v] = 1/d_u si (u, v) ∈ D(G), 0 sinon."""
    p = np.zeros((g.n, g.n), dtype=np.float64)
    for u in range(g.n):
        p[u, list(g.adjacency[u])] = 1.0 / g.degrees[u]
    return _frozen(p)


def laplacian(g: Graph) -> Matrix:
    """Δ = D - A."""
    return _frozen(np.asarray(degree_matrix(g) - adjacency_matrix(g)))


def build_walk_operators(g: Graph) -> WalkOperators:
    u = grover_matrix(g)
    logger.debug("Walk operators for %s: U is %dx%d", g.describe(), *u.shape)
    return WalkOperators(
        graph=g,
        u_matrix=u,
        u_support=positive_support(u),
        edge=edge_matrix(g),
        p_matrix=transition_matrix(g),
        a_matrix=adjacency_matrix(g),
        d_matrix=degree_matrix(g),
        laplacian=laplacian(g),
    )


def orthogonality_defect(u) -> float:
    """‖UᵀU - I‖_max."""
    u = np.asarray(u)
    return float(np.max(np.abs(u.T @ u - np.eye(u.shape[0]))))
