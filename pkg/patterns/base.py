"""
Grammaire des sources de graphes et des fichiers de liste d'arêtes.
L'ordre définit la priorité : les patterns en premier sont testés d'abord.
"""

from core.models import GraphFamily

# Sources `famille:spec` (regex complète, insensible à la casse)
FAMILY_PATTERNS: dict[GraphFamily, str] = {
    GraphFamily.COMPLETE: r'^complete:(\d+)$',
    GraphFamily.CYCLE: r'^cycle:(\d+)$',
    GraphFamily.STAR: r'^star:(\d+)$',
    GraphFamily.PATH: r'^path:(\d+)$',

    # K_{a,b}
    GraphFamily.BIPARTITE: r'^bipartite:(\d+),(\d+)$',

    # n, cordes supplémentaires, graine optionnelle
    GraphFamily.RANDOM: r'^random:(\d+),(\d+)(?:,(\d+))?$',

    # Graphe nommé du catalogue presets/
    GraphFamily.NAMED: r'^named:([a-z0-9_-]+)$',
}

# Ligne d'arête : deux entiers non négatifs séparés par des blancs
EDGE_LINE_PATTERN = r'^\s*(\d+)\s+(\d+)\s*$'

# Ligne ignorée : vide ou commentaire `#`
SKIP_LINE_PATTERN = r'^\s*(?:#.*)?$'

# Point complexe `re,im` des options --u / --s
COMPLEX_POINT_PATTERN = r'^\s*([-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?)\s*(?:,\s*([-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?)\s*)?$'
