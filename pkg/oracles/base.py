"""
Classe de base pour les oracles de contrôle croisé.
"""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List

from core.models import Graph

logger = logging.getLogger(__name__)


class OracleType(Enum):
    """Oracles disponibles."""
    ENUMERATION = "enumeration"
    NETWORKX = "networkx"


@dataclass
class OracleConfig:
    """Configuration d'un oracle."""
    enabled: bool = True
    tolerance: float = 1e-9
    max_length: int = 6
    max_arcs: int = 60


@dataclass
class OracleResult:
    """Résultat d'un contrôle : valeur attendue (calcul du laboratoire) et valeur observée (oracle)."""
    check: str
    passed: bool
    expected: Any = None
    observed: Any = None
    source: str = "unknown"
    detail: str = ""


class BaseOracle(ABC):
    """
    Classe de base abstraite pour tous les oracles.
    Chaque oracle doit implémenter is_available() et cross_check().
    """

    def __init__(self, config: Dict[str, Any] = None):
        self.config = OracleConfig(**config) if config else OracleConfig()
        self._initialized = False
        self._available = None

    @property
    def name(self) -> str:
        return self.__class__.__name__.replace("Oracle", "").lower()

    @abstractmethod
    def is_available(self) -> bool:
        """Vérifie si les dépendances de l'oracle sont disponibles."""

    @abstractmethod
    def cross_check(self, graph: Graph) -> List[OracleResult]:
        """
        Compare les calculs du laboratoire à un calcul indépendant.

        Args:
            graph: Graphe à contrôler

        Returns:
            Un résultat par contrôle effectué
        """

    def initialize(self) -> bool:
        """Initialisation paresseuse, une seule fois au premier usage."""
        if self._initialized:
            return True

        if not self.is_available():
            logger.warning("Oracle %s is not available", self.name)
            return False

        try:
            self._do_initialize()
            self._initialized = True
            return True
        except Exception as e:
            logger.warning("Failed to initialize oracle %s: %s", self.name, e)
            return False

    def ready(self) -> bool:
        """Faux si l'oracle est désactivé ou indisponible."""
        if not self.config.enabled:
            logger.debug("Oracle %s is disabled", self.name)
            return False
        return self.initialize()

    def _do_initialize(self):
        pass

    def get_status(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "available": self.is_available(),
            "initialized": self._initialized,
            "enabled": self.config.enabled,
            "tolerance": self.config.tolerance,
        }
