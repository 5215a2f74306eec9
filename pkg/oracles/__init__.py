"""
Oracles de contrôle croisé - calculs indépendants des opérations du laboratoire.
"""

import logging
from typing import Optional

from .base import BaseOracle, OracleConfig, OracleResult, OracleType
from .enumeration_oracle import EnumerationOracle
from .networkx_oracle import NetworkXOracle

logger = logging.getLogger(__name__)

__all__ = [
    'BaseOracle',
    'OracleConfig',
    'OracleResult',
    'OracleType',
    'EnumerationOracle',
    'NetworkXOracle',
    'AVAILABLE_ORACLES',
    'get_oracle',
    'get_available_oracles',
]

# Registry des oracles disponibles
AVAILABLE_ORACLES = {
    OracleType.ENUMERATION.value: EnumerationOracle,
    OracleType.NETWORKX.value: NetworkXOracle,
}


def get_oracle(name: str, config: dict = None) -> Optional[BaseOracle]:
    """
    Factory pour obtenir un oracle par son nom.

    Args:
        name: Nom de l'oracle ('enumeration', 'networkx')
        config: Configuration optionnelle

    Returns:
        Instance de l'oracle ou None si inconnu
    """
    oracle_class = AVAILABLE_ORACLES.get(name)
    if oracle_class is None:
        return None

    try:
        return oracle_class(config or {})
    except Exception as e:
        logger.warning("Failed to create oracle %r: %s", name, e)
        return None


def get_available_oracles() -> list[str]:
    """Retourne la liste des oracles utilisables."""
    available = []
    for name, cls in AVAILABLE_ORACLES.items():
        try:
            if cls({}).is_available():
                available.append(name)
        except Exception:
            logger.debug("Oracle %r failed its availability check", name, exc_info=True)
    return available
