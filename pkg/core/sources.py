"""
Résolution des sources de graphes (`famille:spec`, `named:id`, fichier)
et des points complexes `re,im`.
"""

import json
import logging
import re
from pathlib import Path
from typing import Callable, Dict, Optional, Tuple

from config import Config
from patterns import COMPLEX_POINT_PATTERN, FAMILY_PATTERNS
from presets import PresetLoader
from .errors import GraphError, UnknownGraphSourceError
from .graph import (
    complete_graph,
    complete_bipartite_graph,
    cycle_graph,
    graph_from_edge_list,
    graph_from_json,
    path_graph,
    read_edge_list,
    read_text_file,
    random_connected_graph,
    star_graph,
)
from .models import Graph, GraphFamily

logger = logging.getLogger(__name__)

_compiled = {family: re.compile(regex, re.IGNORECASE) for family, regex in FAMILY_PATTERNS.items()}
_COMPLEX_POINT = re.compile(COMPLEX_POINT_PATTERN)

_SINGLE_ORDER: Dict[GraphFamily, Callable[[int], Graph]] = {
    GraphFamily.COMPLETE: complete_graph,
    GraphFamily.CYCLE: cycle_graph,
    GraphFamily.STAR: star_graph,
    GraphFamily.PATH: path_graph,
}


def load_named_graph(preset_id: str) -> Graph:
    preset = PresetLoader.get(preset_id)
    if preset is None:
        raise UnknownGraphSourceError(f"named:{preset_id}", "no such preset")
    return graph_from_edge_list([tuple(e) for e in preset['edges']], name=preset.get('name', preset_id))


def resolve_graph_source(source: str, seed: Optional[int] = None, allow_files: bool = True) -> Graph:
    """
    Construit le graphe désigné par `source`.
    Les familles sont testées d'abord ; sinon `source` est un chemin de fichier
    (graphe JSON si l'extension est `.json`, liste d'arêtes sinon), refusé si allow_files est faux.
    """
    source = source.strip()
    seed = Config.DEFAULT_SEED if seed is None else seed

    for family, compiled in _compiled.items():
        match = compiled.match(source)
        if not match:
            continue
        logger.debug("Graph source %r matched family %s", source, family.value)
        if family in _SINGLE_ORDER:
            return _SINGLE_ORDER[family](int(match.group(1)))
        if family == GraphFamily.BIPARTITE:
            return complete_bipartite_graph(int(match.group(1)), int(match.group(2)))
        if family == GraphFamily.RANDOM:
            graph_seed = int(match.group(3)) if match.group(3) is not None else seed
            return random_connected_graph(int(match.group(1)), int(match.group(2)), graph_seed)
        if family == GraphFamily.NAMED:
            return load_named_graph(match.group(1).lower())

    if not allow_files:
        raise UnknownGraphSourceError(source, "not a family spec")

    path = Path(source)
    if not path.is_file():
        raise UnknownGraphSourceError(source, "not a family spec and no such file")
    if path.suffix.lower() == '.json':
        try:
            obj = json.loads(read_text_file(path))
        except json.JSONDecodeError as e:
            raise GraphError(f"{source}: invalid JSON ({e})") from e
        return graph_from_json(obj, name=path.stem)
    return read_edge_list(path)


def parse_complex_point(text: str) -> complex:
    """`re,im` ou `re` seul -> complexe."""
    match = _COMPLEX_POINT.match(text)
    if not match:
        raise ValueError(f"expected 're,im', got {text!r}")
    imag = match.group(2)
    return complex(float(match.group(1)), float(imag) if imag is not None else 0.0)


def graph_size_hint(source: str) -> Optional[Tuple[int, int]]:
    """
    Ordre n et nombre d'arcs 2m annoncés par une spec de famille, sans construire
    le graphe. Pour `random:` le nombre d'arcs est un majorant. None sinon.
    """
    source = source.strip()
    for family, compiled in _compiled.items():
        match = compiled.match(source)
        if not match:
            continue
        if family == GraphFamily.BIPARTITE:
            a, b = int(match.group(1)), int(match.group(2))
            return a + b, 2 * a * b
        n = int(match.group(1))
        if family == GraphFamily.COMPLETE:
            return n, n * (n - 1)
        if family == GraphFamily.CYCLE:
            return n, 2 * n
        if family in (GraphFamily.STAR, GraphFamily.PATH):
            return n, 2 * max(n - 1, 0)
        if family == GraphFamily.RANDOM:
            edges = max(n - 1, 0) + int(match.group(2))
            return n, 2 * min(edges, n * (n - 1) // 2)
        return None
    return None
