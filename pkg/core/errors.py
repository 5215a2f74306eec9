"""
Exceptions du laboratoire.
Les erreurs de graphe sont aussi des ValueError ; les vérifications
n'en lèvent jamais (un échec est consigné dans le rapport).
"""

from typing import Optional, Tuple


class QWZetaError(Exception):
    """Racine de toutes les erreurs du laboratoire."""


# ==========================================
# Graphes
# ==========================================

class GraphError(QWZetaError, ValueError):
    """Graphe invalide ou impossible à construire."""


class EmptyEdgeListError(GraphError):
    def __init__(self):
        super().__init__("edge list is empty")


class InvalidVertexError(GraphError):
    def __init__(self, label):
        self.label = label
        super().__init__(f"vertex label {label!r} is not a non-negative integer")


class SelfLoopError(GraphError):
    def __init__(self, pair: Tuple[int, int]):
        self.pair = pair
        super().__init__(f"self-loop {pair}")


class DuplicateEdgeError(GraphError):
    def __init__(self, pair: Tuple[int, int]):
        self.pair = pair
        super().__init__(f"duplicate edge {pair}")


class DisconnectedGraphError(GraphError):
    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"graph is disconnected: vertex {vertex} is unreachable from vertex 0")


class InvalidOrderError(GraphError):
    def __init__(self, family: str, order: int, minimum: int):
        self.family = family
        self.order = order
        super().__init__(f"{family} graph needs order >= {minimum}, got {order}")


class EdgeListParseError(GraphError):
    def __init__(self, line_number: int, line: str):
        self.line_number = line_number
        self.line = line
        super().__init__(f"line {line_number}: expected two non-negative integers, got {line.strip()!r}")


class UnknownGraphSourceError(GraphError):
    def __init__(self, source: str, reason: Optional[str] = None):
        self.source = source
        message = f"unknown graph source {source!r}"
        if reason:
            message += f" ({reason})"
        super().__init__(message)


class NotRegularError(GraphError):
    def __init__(self):
        super().__init__("graph is not regular")


# ==========================================
# Calcul numérique
# ==========================================

class SpectralError(QWZetaError):
    """Échec d'un calcul spectral."""


class EigensolveError(SpectralError):
    """L'eigensolve n'a pas convergé ou a produit un résultat incohérent."""


class OutOfRangeError(SpectralError, ValueError):
    """Argument hors du domaine de l'opération."""


class RemovalUnderflowError(SpectralError):
    def __init__(self, value, needed: int, available: int):
        self.value = value
        self.needed = needed
        self.available = available
        super().__init__(f"cannot remove {needed} copies of {value}: only {available} available")


class AmbiguousClusteringError(SpectralError):
    def __init__(self, first: complex, second: complex, tol: float):
        super().__init__(
            f"cluster representatives {first} and {second} are within {tol:g}; "
            "grouping tolerance is too coarse for this spectrum"
        )


class PoleError(QWZetaError, ZeroDivisionError):
    def __init__(self, u: complex, exponent: int):
        self.u = u
        self.exponent = exponent
        super().__init__(f"u={u} is a pole: (1 - u^2)^{exponent} diverges")


class OracleMismatchError(QWZetaError):
    def __init__(self, quantity: str, expected, observed):
        self.quantity = quantity
        self.expected = expected
        self.observed = observed
        super().__init__(f"{quantity}: trace gives {expected}, enumeration gives {observed}")
