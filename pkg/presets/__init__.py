"""
Module presets - Catalogue de graphes nommés (Petersen, cube, K_{3,3}, ...).
"""

from .loader import PresetLoader, get_presets, get_preset

__all__ = [
    'PresetLoader',
    'get_presets',
    'get_preset',
]
