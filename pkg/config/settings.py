"""
Configuration globale du laboratoire.
"""

import logging
import os

logger = logging.getLogger(__name__)

# Version de l'application
VERSION = "1.0.0"


def _env_float(name: str, default: float) -> float:
    raw = os.environ.get(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = float(raw)
    except ValueError:
        logger.warning("Ignoring %s=%r: not a number", name, raw)
        return default
    if value <= 0:
        logger.warning("Ignoring %s=%r: must be positive", name, raw)
        return default
    return value


def _env_int(name: str, default: int, minimum: int = 0) -> int:
    raw = os.environ.get(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw)
    except ValueError:
        logger.warning("Ignoring %s=%r: not an integer", name, raw)
        return default
    if value < minimum:
        logger.warning("Ignoring %s=%r: must be >= %d", name, raw, minimum)
        return default
    return value


class Config:
    """Tolérances, valeurs par défaut et configuration Flask."""

    # ==========================================
    # Tolérances numériques
    # ==========================================

    # Regroupement des valeurs propres en multiplicités (absolu)
    GROUPING_TOL = _env_float('QWZETA_TOL', 1e-9)

    # Dépassement toléré hors de [-1, 1] avant de ramener λ_P sur le bord
    CLAMP_TOL = 1e-9

    # Identités déterminantielles (résidu relatif)
    IDENTITY_TOL = 1e-8

    # Position des zéros sur la droite critique
    ZERO_TOL = 1e-10

    # Rayon d'appariement entre spectres direct et reconstruit
    MATCH_RADIUS = 1e-8

    # Seuil du support positif U⁺ (2/d - 1 arrondi)
    SUPPORT_THRESHOLD = 1e-12

    # Orthogonalité de U_{2m}
    ORTHOGONALITY_TOL = 1e-12

    # |λ_U| = 1 pour l'eigensolve direct
    UNIT_MODULUS_TOL = 1e-10

    # θ considéré nul (point à l'infini ρ(0))
    INFINITY_THETA_TOL = 1e-12

    # Pôle u² = 1 quand l'exposant de (1 - u²) est négatif
    POLE_TOL = 1e-12

    # Distance minimale à u² = 1 pour les échantillons de vérification
    POLE_SKIP = 1e-6

    # Borne inférieure de λ_M (hypothèse de Riemann)
    RH_LOWER_TOL = 1e-12

    # ==========================================
    # Échantillonnage
    # ==========================================

    DEFAULT_SEED = _env_int('QWZETA_SEED', 42)
    DEFAULT_SAMPLES = _env_int('QWZETA_SAMPLES', 20, minimum=1)
    DEFAULT_RADIUS = _env_float('QWZETA_RADIUS', 0.5)

    # Équation fonctionnelle : s dans [-2, 3] x [-3i, 3i]
    FUNCTIONAL_EQ_SAMPLES = 100
    FUNCTIONAL_EQ_BOX = (-2.0, 3.0, -3.0, 3.0)

    # Oracle d'énumération des cycles réduits
    CYCLE_ORACLE_MAX_R = 6
    CYCLE_ORACLE_MAX_ARCS = 60

    # Pool de graphes de référence
    POOL_MAX_TREE_ORDER = 7
    POOL_RANDOM_COUNT = 100
    POOL_RANDOM_MAX_ORDER = 12

    # ==========================================
    # Sorties
    # ==========================================

    # Chiffres significatifs du format texte
    TEXT_DIGITS = 12

    LOG_LEVEL = os.environ.get('QWZETA_LOG_LEVEL', 'WARNING').strip().upper() or 'WARNING'

    # ==========================================
    # API HTTP
    # ==========================================

    DEBUG = False
    HOST = '0.0.0.0'
    PORT = 5000

    # Plus grand ordre n accepté par l'API
    MAX_GRAPH_ORDER = 200

    # Plus grand nombre d'arcs 2m accepté par l'API (U est 2m x 2m)
    MAX_ARCS = 2000

    # Nombre max d'échantillons par requête de vérification
    MAX_SAMPLES = 1000


class DevelopmentConfig(Config):
    """Configuration pour le développement."""
    DEBUG = True
    LOG_LEVEL = 'DEBUG'


class ProductionConfig(Config):
    """Configuration pour la production."""
    DEBUG = False
