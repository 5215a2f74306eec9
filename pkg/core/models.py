"""
Modèles de données du laboratoire.
Contient les enums, dataclasses et types utilisés dans l'application.
Toutes les structures sont immuables une fois construites.
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Dict, List, Optional, Tuple, Union

import numpy as np
import numpy.typing as npt

Matrix = npt.NDArray[np.float64]


class GraphFamily(Enum):
    """Familles de graphes générables depuis une source `famille:spec`."""
    COMPLETE = "complete"
    CYCLE = "cycle"
    STAR = "star"
    PATH = "path"
    BIPARTITE = "bipartite"
    RANDOM = "random"
    NAMED = "named"


class CaseTag(Enum):
    """Position relative de m et n (cas (i), (ii), (iii))."""
    M_GT_N = "M_GT_N"
    M_EQ_N = "M_EQ_N"
    M_LT_N = "M_LT_N"

    @classmethod
    def of(cls, n: int, m: int) -> "CaseTag":
        if m > n:
            return cls.M_GT_N
        if m == n:
            return cls.M_EQ_N
        return cls.M_LT_N


class Operator(Enum):
    """Opérateurs exposés par `spectrum` et `export`."""
    RW = "rw"
    GROVER = "grover"
    GROVER_SUPPORT = "grover-support"
    LAPLACIAN = "laplacian"
    ADJACENCY = "adjacency"
    DEGREE = "degree"
    EDGE = "edge"


class Identity(Enum):
    """Identités vérifiables."""
    KONNO_SATO = "konno-sato"
    IHARA_BASS = "ihara-bass"
    SPECTRAL_MAP = "spectral-map"
    CHAR_POLY = "char-poly"
    CYCLES = "cycles"
    STRUCTURE = "structure"
    FUNCTIONAL_EQ = "functional-eq"
    RH = "rh"
    ALL = "all"


class Sentinel(Enum):
    """Point à l'infini ρ(0) = 1/2 + i·(+∞) ; jamais représenté par un float."""
    INFINITY = "inf"

    def __repr__(self) -> str:
        return "INFINITY"


INFINITY = Sentinel.INFINITY

# Partie imaginaire γ d'un zéro ρ = 1/2 + iγ
Gamma = Union[float, Sentinel]


# ==========================================
# Graphes
# ==========================================

@dataclass(frozen=True)
class ArcIndex:
    """
    Indexation canonique de D(G).
    Pour l'arête j = (u, v) : arc 2j = (u, v), arc 2j+1 = (v, u).
    """
    arcs: Tuple[Tuple[int, int], ...]
    _positions: Dict[Tuple[int, int], int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, '_positions', {arc: i for i, arc in enumerate(self.arcs)})

    def __len__(self) -> int:
        return len(self.arcs)

    @staticmethod
    def inverse(e: int) -> int:
        """e ↦ e⁻¹ (2j ↔ 2j+1)."""
        return e ^ 1

    def origin(self, e: int) -> int:
        return self.arcs[e][0]

    def terminus(self, e: int) -> int:
        return self.arcs[e][1]

    def index(self, arc: Tuple[int, int]) -> int:
        return self._positions[arc]


@dataclass(frozen=True)
class Graph:
    """Graphe simple, connexe, non orienté, sommets 0..n-1."""
    n: int
    edges: Tuple[Tuple[int, int], ...]
    adjacency: Tuple[Tuple[int, ...], ...]
    degrees: Tuple[int, ...]
    labels: Tuple[int, ...] = field(default=(), compare=False)
    name: str = field(default="", compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def arc_index(self) -> ArcIndex:
        arcs: List[Tuple[int, int]] = []
        for u, v in self.edges:
            arcs.append((u, v))
            arcs.append((v, u))
        return ArcIndex(tuple(arcs))

    @property
    def case_tag(self) -> CaseTag:
        return CaseTag.of(self.n, self.m)

    def describe(self) -> str:
        label = self.name or "graph"
        return f"{label} (n={self.n}, m={self.m})"


@dataclass(frozen=True, eq=False)
class WalkOperators:
    """Matrices denses d'un graphe : U_{2m}, U⁺, B, P_n, A_n, D_n, Δ_n."""
    graph: Graph
    u_matrix: Matrix
    u_support: Matrix
    edge: Matrix
    p_matrix: Matrix
    a_matrix: Matrix
    d_matrix: Matrix
    laplacian: Matrix


# ==========================================
# Spectres
# ==========================================

@dataclass(frozen=True)
class SpectrumEntry:
    """[λ]^l : valeur propre et multiplicité."""
    value: complex
    multiplicity: int


@dataclass(frozen=True)
class Spectrum:
    """Multiensemble de valeurs propres, trié par (partie réelle, partie imaginaire)."""
    entries: Tuple[SpectrumEntry, ...]
    grouping_tol: float

    @classmethod
    def from_pairs(cls, pairs, grouping_tol: float) -> "Spectrum":
        entries = [SpectrumEntry(complex(v), int(l)) for v, l in pairs if l > 0]
        entries.sort(key=lambda e: (e.value.real, e.value.imag))
        return cls(tuple(entries), grouping_tol)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def total(self) -> int:
        return sum(e.multiplicity for e in self.entries)

    def values(self) -> List[complex]:
        """Valeurs propres répétées selon leur multiplicité."""
        out: List[complex] = []
        for e in self.entries:
            out.extend([e.value] * e.multiplicity)
        return out

    def multiplicity_at(self, value: complex, tol: Optional[float] = None) -> int:
        radius = self.grouping_tol if tol is None else tol
        return sum(e.multiplicity for e in self.entries if abs(e.value - value) <= radius)


@dataclass(frozen=True)
class AngleEntry:
    theta: float
    multiplicity: int


@dataclass(frozen=True)
class AngleSpectrum:
    """Angles θ ∈ [0, π] des valeurs propres cos θ de P_n, θ croissant."""
    entries: Tuple[AngleEntry, ...]

    @property
    def total(self) -> int:
        return sum(e.multiplicity for e in self.entries)


@dataclass(frozen=True)
class MEntry:
    value: float
    multiplicity: int


@dataclass(frozen=True)
class MSpectrum:
    """Spec(M_n) au sens des valeurs propres ; λ_P = 1 donne +∞."""
    finite: Tuple[MEntry, ...]
    infinite_multiplicity: int

    @property
    def total(self) -> int:
        return self.infinite_multiplicity + sum(e.multiplicity for e in self.finite)


# ==========================================
# Zéros de Λ^QW
# ==========================================

def gamma_sort_key(gamma: Gamma) -> Tuple[int, float]:
    if gamma is INFINITY:
        return (1, 0.0)
    return (0, float(gamma))


@dataclass(frozen=True)
class ZeroEntry:
    """[1/2 + iγ]^l ; γ = INFINITY pour ρ(0)."""
    gamma: Gamma
    multiplicity: int

    @property
    def is_finite(self) -> bool:
        return self.gamma is not INFINITY

    @property
    def point(self) -> Optional[complex]:
        if self.gamma is INFINITY:
            return None
        return complex(0.5, self.gamma)


@dataclass(frozen=True)
class ZeroSet:
    """Zero(Λ^QW_G) partagé entre la part RW et la part RW^c."""
    rw_zeros: Tuple[ZeroEntry, ...]
    rwc_zeros: Tuple[ZeroEntry, ...]
    case_tag: CaseTag
    zeros: Tuple[ZeroEntry, ...]

    @property
    def total(self) -> int:
        return sum(z.multiplicity for z in self.zeros)

    @property
    def infinite_multiplicity(self) -> int:
        return sum(z.multiplicity for z in self.zeros if z.gamma is INFINITY)

    def finite(self) -> List[ZeroEntry]:
        return [z for z in self.zeros if z.is_finite]

    def multiplicity_at(self, gamma: Gamma, tol: float = 1e-10) -> int:
        if gamma is INFINITY:
            return self.infinite_multiplicity
        return sum(
            z.multiplicity for z in self.zeros
            if z.is_finite and abs(z.gamma - gamma) <= tol
        )


# ==========================================
# Vérification
# ==========================================

Point = Union[complex, float, int, str]


@dataclass(frozen=True)
class Sample:
    """Une évaluation des deux membres d'une identité."""
    point: Point
    lhs: Union[complex, float]
    rhs: Union[complex, float]
    abs_residual: float
    rel_residual: float


@dataclass(frozen=True)
class VerificationReport:
    """Résidus d'une identité sur un graphe."""
    identity_name: str
    samples: Tuple[Sample, ...]
    max_rel_residual: float
    tolerance: float
    graph_name: str = ""

    @classmethod
    def from_samples(cls, identity_name: str, samples, tolerance: float,
                     graph_name: str = "") -> "VerificationReport":
        samples = tuple(samples)
        worst = max((s.rel_residual for s in samples), default=0.0)
        return cls(identity_name, samples, worst, tolerance, graph_name)

    @property
    def passed(self) -> bool:
        return math.isfinite(self.max_rel_residual) and self.max_rel_residual <= self.tolerance
