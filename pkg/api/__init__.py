"""
Module API - Routes Flask de l'application web.
"""

from .routes import api_bp

__all__ = ['api_bp']
