"""
Module patterns - Grammaire des sources de graphes et des points complexes.
"""

from .base import FAMILY_PATTERNS, EDGE_LINE_PATTERN, SKIP_LINE_PATTERN, COMPLEX_POINT_PATTERN

__all__ = [
    'FAMILY_PATTERNS',
    'EDGE_LINE_PATTERN',
    'SKIP_LINE_PATTERN',
    'COMPLEX_POINT_PATTERN',
]
