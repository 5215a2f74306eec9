"""
Oracle par énumération exhaustive des suites d'arcs fermées sans retour arrière.
"""

import logging
from typing import Any, Dict, List

import numpy as np

from core.models import Graph
from core.operators import edge_matrix
from core.zeta import count_closed_reduced
from .base import BaseOracle, OracleResult

logger = logging.getLogger(__name__)


class EnumerationOracle(BaseOracle):
    """
    Compare tr(B^r) à l'énumération exhaustive pour r = 1..max_length.
    Les graphes avec plus de max_arcs arcs sont ignorés (coût exponentiel).
    """

    def __init__(self, config: Dict[str, Any] = None):
        super().__init__(config)

    def is_available(self) -> bool:
        return True

    def cross_check(self, graph: Graph) -> List[OracleResult]:
        if not self.ready():
            return []
        if 2 * graph.m > self.config.max_arcs:
            logger.debug("Skipping enumeration for %s: %d arcs", graph.describe(), 2 * graph.m)
            return []

        b = np.asarray(edge_matrix(graph))
        power = np.eye(b.shape[0])
        results: List[OracleResult] = []
        for r in range(1, self.config.max_length + 1):
            power = power @ b
            expected = int(round(float(np.trace(power))))
            observed = count_closed_reduced(graph, r)
            results.append(OracleResult(
                check=f"N_{r}",
                passed=expected == observed,
                expected=expected,
                observed=observed,
                source=self.name,
            ))
        return results
