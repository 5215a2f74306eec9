"""
Oracle structurel basé sur networkx : adjacence, laplacien, connexité,
bipartisme et spectre du laplacien normalisé recalculés indépendamment.
"""

import logging
from typing import Any, Dict, List

import numpy as np

from core.graph import to_networkx
from core.models import Graph
from core.operators import adjacency_matrix, laplacian
from core.spectral import rw_spectrum
from .base import BaseOracle, OracleResult

logger = logging.getLogger(__name__)


class NetworkXOracle(BaseOracle):
    """
    Contrôles :
    - A_n et Δ_n identiques à ceux de networkx ;
    - G connexe ;
    - G biparti ⇔ -1 ∈ Spec(P_n) ;
    - Spec(𝓛) = 1 - Spec(P_n) pour le laplacien normalisé 𝓛.
    """

    def __init__(self, config: Dict[str, Any] = None):
        super().__init__(config)
        self._nx = None

    def is_available(self) -> bool:
        if self._available is not None:
            return self._available

        try:
            import networkx  # noqa: F401
            self._available = True
        except ImportError:
            self._available = False

        return self._available

    def _do_initialize(self):
        import networkx
        self._nx = networkx

    def _matrix_check(self, check: str, ours, theirs) -> OracleResult:
        defect = float(np.max(np.abs(np.asarray(ours) - np.asarray(theirs)))) if np.size(ours) else 0.0
        return OracleResult(
            check=check,
            passed=defect <= self.config.tolerance,
            expected=0.0,
            observed=defect,
            source=self.name,
        )

    def cross_check(self, graph: Graph) -> List[OracleResult]:
        if not self.ready():
            return []

        nx = self._nx
        nodes = list(range(graph.n))
        nx_graph = to_networkx(graph)
        results: List[OracleResult] = []

        results.append(self._matrix_check(
            "adjacency", adjacency_matrix(graph), nx.to_numpy_array(nx_graph, nodelist=nodes)))
        results.append(self._matrix_check(
            "laplacian", laplacian(graph), nx.laplacian_matrix(nx_graph, nodelist=nodes).toarray()))

        connected = nx.is_connected(nx_graph)
        results.append(OracleResult("connected", connected, True, connected, self.name))

        spectrum = rw_spectrum(graph)
        has_minus_one = spectrum.multiplicity_at(-1.0) > 0
        bipartite = nx.is_bipartite(nx_graph)
        results.append(OracleResult(
            "bipartite", bipartite == has_minus_one, has_minus_one, bipartite, self.name,
            detail="-1 in Spec(P) versus networkx two-colouring",
        ))

        normalized = nx.normalized_laplacian_matrix(nx_graph, nodelist=nodes).toarray()
        theirs = np.sort(np.linalg.eigvalsh(normalized))
        ours = np.sort(1.0 - np.array([v.real for v in spectrum.values()]))
        if theirs.shape != ours.shape:
            results.append(OracleResult("normalized-laplacian", False, len(ours), len(theirs), self.name))
        else:
            results.append(self._matrix_check("normalized-laplacian", ours, theirs))
        return results
