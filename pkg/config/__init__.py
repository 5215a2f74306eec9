"""
Module de configuration de l'application.
"""

from .settings import Config, DevelopmentConfig, ProductionConfig, VERSION

__all__ = ['Config', 'DevelopmentConfig', 'ProductionConfig', 'VERSION']
