"""
Représentation des graphes : validation, familles, indexation des arcs,
lecture/écriture des listes d'arêtes.
"""

import logging
import re
from collections import deque
from dataclasses import replace
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from config import Config
from patterns import EDGE_LINE_PATTERN, SKIP_LINE_PATTERN
from .errors import (
    DisconnectedGraphError,
    DuplicateEdgeError,
    EdgeListParseError,
    EmptyEdgeListError,
    GraphError,
    InvalidOrderError,
    InvalidVertexError,
    SelfLoopError,
)
from .models import ArcIndex, Graph

logger = logging.getLogger(__name__)

_EDGE_LINE = re.compile(EDGE_LINE_PATTERN)
_SKIP_LINE = re.compile(SKIP_LINE_PATTERN)


def _check_label(label: Any) -> int:
    if isinstance(label, bool) or not isinstance(label, (int, np.integer)) or label < 0:
        raise InvalidVertexError(label)
    return int(label)


def _build(n: int, pairs: Iterable[Tuple[int, int]], labels: Sequence[int] = (),
           name: str = "", originals: Optional[Sequence[Tuple[int, int]]] = None) -> Graph:
    """
    Construit un Graph à partir de sommets 0..n-1 déjà numérotés.
    `originals` donne les paires telles que fournies, pour les messages d'erreur.
    """
    pairs = list(pairs)
    originals = list(originals) if originals is not None else pairs
    seen = set()
    for (u, v), original in zip(pairs, originals):
        if u == v:
            raise SelfLoopError(tuple(original))
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdgeError(tuple(original))
        seen.add(key)

    edges = tuple(sorted(seen))
    neighbours: List[List[int]] = [[] for _ in range(n)]
    for u, v in edges:
        neighbours[u].append(v)
        neighbours[v].append(u)
    adjacency = tuple(tuple(sorted(ns)) for ns in neighbours)

    # Parcours en largeur depuis le sommet 0
    reached = [False] * n
    reached[0] = True
    queue = deque([0])
    while queue:
        w = queue.popleft()
        for x in adjacency[w]:
            if not reached[x]:
                reached[x] = True
                queue.append(x)
    for v, ok in enumerate(reached):
        if not ok:
            raise DisconnectedGraphError(labels[v] if labels else v)

    degrees = tuple(len(ns) for ns in adjacency)
    return Graph(
        n=n,
        edges=edges,
        adjacency=adjacency,
        degrees=degrees,
        labels=tuple(labels) if labels else tuple(range(n)),
        name=name,
    )


def graph_from_edge_list(pairs: Sequence[Tuple[int, int]], name: str = "") -> Graph:
    """
    Valide une liste d'arêtes et renumérote les sommets 0..n-1
    dans l'ordre de première apparition.
    """
    pairs = list(pairs)
    if not pairs:
        raise EmptyEdgeListError()

    relabel: Dict[int, int] = {}
    internal: List[Tuple[int, int]] = []
    originals: List[Tuple[int, int]] = []
    for pair in pairs:
        if len(pair) != 2:
            raise GraphError(f"edge {pair!r} is not a pair")
        u, v = (_check_label(x) for x in pair)
        originals.append((u, v))
        for x in (u, v):
            if x not in relabel:
                relabel[x] = len(relabel)
        internal.append((relabel[u], relabel[v]))

    labels = [0] * len(relabel)
    for label, idx in relabel.items():
        labels[idx] = label
    return _build(len(relabel), internal, labels=labels, name=name, originals=originals)


# ==========================================
# Familles
# ==========================================

def complete_graph(n: int) -> Graph:
    if n < 2:
        raise InvalidOrderError("complete", n, 2)
    return graph_from_edge_list([(i, j) for i in range(n) for j in range(i + 1, n)], name=f"K_{n}")


def cycle_graph(n: int) -> Graph:
    # C_2 serait une arête double
    if n < 3:
        raise InvalidOrderError("cycle", n, 3)
    return graph_from_edge_list([(i, (i + 1) % n) for i in range(n)], name=f"C_{n}")


def star_graph(n: int) -> Graph:
    """S_n ≅ K_{1,n-1}, le sommet 0 est le centre."""
    if n < 2:
        raise InvalidOrderError("star", n, 2)
    return graph_from_edge_list([(0, i) for i in range(1, n)], name=f"S_{n}")


def path_graph(n: int) -> Graph:
    if n < 2:
        raise InvalidOrderError("path", n, 2)
    return graph_from_edge_list([(i, i + 1) for i in range(n - 1)], name=f"P_{n}")


def complete_bipartite_graph(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise InvalidOrderError("complete bipartite", min(a, b), 1)
    return graph_from_edge_list(
        [(i, a + j) for i in range(a) for j in range(b)], name=f"K_{a},{b}"
    )


def random_connected_graph(n: int, extra_edges: int, seed: int) -> Graph:
    """
    Arbre de Prüfer aléatoire plus `extra_edges` cordes distinctes.
    Reproductible à graine fixée ; le nombre de cordes est borné par le graphe complet.
    """
    if n < 2:
        raise InvalidOrderError("random", n, 2)
    rng = np.random.default_rng(seed)
    sequence = [int(x) for x in rng.integers(0, n, size=n - 2)]
    tree = nx.from_prufer_sequence(sequence)
    present = {(min(u, v), max(u, v)) for u, v in tree.edges()}
    chords = [(i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in present]
    count = min(max(extra_edges, 0), len(chords))
    if count:
        picked = rng.choice(len(chords), size=count, replace=False)
        present.update(chords[int(k)] for k in picked)
    return _build(n, sorted(present), name=f"random-{n}-{count}-{seed}")


def all_trees(max_order: int) -> List[Graph]:
    """Tous les arbres non isomorphes à 2..max_order sommets."""
    trees: List[Graph] = []
    if max_order >= 2:
        trees.append(replace(path_graph(2), name="tree-2-0"))
    for order in range(3, max_order + 1):
        for k, tree in enumerate(nx.nonisomorphic_trees(order)):
            trees.append(from_networkx(tree, name=f"tree-{order}-{k}"))
    return trees


def standard_pool(seed: int = Config.DEFAULT_SEED,
                  random_count: int = Config.POOL_RANDOM_COUNT,
                  random_max_order: int = Config.POOL_RANDOM_MAX_ORDER,
                  max_tree_order: int = Config.POOL_MAX_TREE_ORDER) -> List[Graph]:
    """
    Pool de référence : arbres ≤ 7 sommets, C_3..C_10, K_2..K_6, S_2..S_10
    et des graphes connexes aléatoires à graine fixée.
    """
    pool = all_trees(max_tree_order)
    pool += [cycle_graph(n) for n in range(3, 11)]
    pool += [complete_graph(n) for n in range(2, 7)]
    pool += [star_graph(n) for n in range(2, 11)]

    rng = np.random.default_rng(seed)
    for _ in range(random_count):
        n = int(rng.integers(3, random_max_order + 1))
        max_extra = n * (n - 1) // 2 - (n - 1)
        extra = int(rng.integers(0, max_extra + 1))
        pool.append(random_connected_graph(n, extra, int(rng.integers(0, 2**31 - 1))))

    logger.debug("Standard pool: %d graphs", len(pool))
    return pool


# ==========================================
# Invariants
# ==========================================

def betti_number(g: Graph) -> int:
    """γ = m - n + 1."""
    return g.m - g.n + 1


def arc_index(g: Graph) -> ArcIndex:
    return g.arc_index


def is_regular(g: Graph) -> bool:
    return len(set(g.degrees)) == 1


def is_bipartite(g: Graph) -> bool:
    """Bicoloration par parcours en largeur."""
    colour = [-1] * g.n
    colour[0] = 0
    queue = deque([0])
    while queue:
        w = queue.popleft()
        for x in g.adjacency[w]:
            if colour[x] == -1:
                colour[x] = 1 - colour[w]
                queue.append(x)
            elif colour[x] == colour[w]:
                return False
    return True


# ==========================================
# Entrées / sorties
# ==========================================

def parse_edge_list(text: str, name: str = "") -> Graph:
    """Une arête par ligne ; lignes vides et commentaires `#` ignorés."""
    pairs: List[Tuple[int, int]] = []
    for number, line in enumerate(text.splitlines(), 1):
        if _SKIP_LINE.match(line):
            continue
        match = _EDGE_LINE.match(line)
        if not match:
            raise EdgeListParseError(number, line)
        pairs.append((int(match.group(1)), int(match.group(2))))
    return graph_from_edge_list(pairs, name=name)


def read_text_file(path) -> str:
    """Contenu UTF-8 d'un fichier de graphe ; GraphError si l'encodage est invalide."""
    path = Path(path)
    try:
        return path.read_text(encoding='utf-8')
    except UnicodeDecodeError as e:
        raise GraphError(f"{path}: not valid UTF-8 ({e.reason} at byte {e.start})") from e


def read_edge_list(path) -> Graph:
    path = Path(path)
    return parse_edge_list(read_text_file(path), name=path.stem)


def format_edge_list(g: Graph) -> str:
    lines = [f"# {g.describe()}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def graph_to_json(g: Graph) -> Dict[str, Any]:
    return {"n": g.n, "m": g.m, "edges": [[u, v] for u, v in g.edges]}


def graph_from_json(obj: Dict[str, Any], name: str = "") -> Graph:
    try:
        n = _check_label(obj["n"])
        edges = [(_check_label(u), _check_label(v)) for u, v in obj["edges"]]
    except (KeyError, TypeError, ValueError) as e:
        if isinstance(e, GraphError):
            raise
        raise GraphError(f"malformed graph JSON: {e}") from e
    if not edges:
        raise EmptyEdgeListError()
    for u, v in edges:
        if u >= n or v >= n:
            raise InvalidVertexError(max(u, v))
    g = _build(n, edges, name=name)
    if "m" in obj and obj["m"] != g.m:
        raise GraphError(f"graph JSON declares m={obj['m']} but lists {g.m} edges")
    return g


def to_networkx(g: Graph) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(g.n))
    graph.add_edges_from(g.edges)
    return graph


def from_networkx(graph: nx.Graph, name: str = "") -> Graph:
    """Les sommets sont renumérotés dans l'ordre trié (ou d'insertion s'ils ne sont pas comparables)."""
    try:
        nodes = sorted(graph.nodes())
    except TypeError:
        nodes = list(graph.nodes())
    if not nodes:
        raise EmptyEdgeListError()
    position = {node: i for i, node in enumerate(nodes)}
    pairs = [(position[u], position[v]) for u, v in graph.edges()]
    labels = [node if isinstance(node, int) else i for i, node in enumerate(nodes)]
    return _build(len(nodes), pairs, labels=labels, name=name)
