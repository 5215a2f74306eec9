"""
Fonctions zêta d'un graphe.

- Z(G, u)⁻¹ d'Ihara, sous forme de Bass et sous forme de déterminant d'arêtes ;
- Z̄(G, u)⁻¹ = det(I - uU) de la marche de Grover et son second membre de Konno-Sato ;
- polynôme caractéristique de U ;
- nombres N_r de cycles réduits ;
- M_n au sens des valeurs propres, ensemble des zéros et Λ^QW.
"""

import logging
import math
from typing import Dict, List, Tuple

import numpy as np

from config import Config
from .errors import NotRegularError, OracleMismatchError, OutOfRangeError, RemovalUnderflowError
from .graph import betti_number, is_regular
from .linalg import int_power, lu_determinant, one_minus_u2_power
from .models import (
    INFINITY,
    Gamma,
    Graph,
    CaseTag,
    MEntry,
    MSpectrum,
    ZeroEntry,
    ZeroSet,
    gamma_sort_key,
)
from .operators import adjacency_matrix, degree_matrix, edge_matrix, grover_matrix, transition_matrix
from .spectral import joukowsky_angle, laplacian_spectrum, rw_spectrum

logger = logging.getLogger(__name__)


# ==========================================
# Déterminants
# ==========================================

def ihara_reciprocal_bass(g: Graph, u: complex) -> complex:
    """
    Z(G, u)⁻¹ = (1 - u²)^{γ-1} det(I - uA + u²(D - I)), γ nombre de Betti.
    Pour un arbre γ - 1 = -1 : PoleError en u² = 1, comme konno_sato_rhs.
    """
    u = complex(u)
    a = adjacency_matrix(g)
    d = degree_matrix(g)
    identity = np.eye(g.n)
    det = lu_determinant(identity - u * a + u * u * (d - identity))
    return one_minus_u2_power(u, betti_number(g) - 1) * det


def ihara_reciprocal_edge(g: Graph, u: complex) -> complex:
    """Z(G, u)⁻¹ = det(I_{2m} - uB), B matrice d'arêtes."""
    b = edge_matrix(g)
    return lu_determinant(np.eye(b.shape[0]) - complex(u) * b)


def grover_zeta_reciprocal(g: Graph, u: complex) -> complex:
    """Z̄(G, u)⁻¹ = det(I_{2m} - uU_{2m})."""
    u_matrix = grover_matrix(g)
    return lu_determinant(np.eye(u_matrix.shape[0]) - complex(u) * u_matrix)


def konno_sato_rhs(g: Graph, u: complex) -> complex:
    """(1 - u²)^{m-n} det((1 + u²)I_n - 2uP_n) ; pôle en u² = 1 si m < n."""
    u = complex(u)
    p = transition_matrix(g)
    det = lu_determinant((1 + u * u) * np.eye(g.n) - 2 * u * p)
    return one_minus_u2_power(u, g.m - g.n) * det


def grover_characteristic_lhs(g: Graph, lam: complex) -> complex:
    """det(λI_{2m} - U_{2m})."""
    u_matrix = grover_matrix(g)
    return lu_determinant(complex(lam) * np.eye(u_matrix.shape[0]) - u_matrix)


def grover_characteristic_rhs(g: Graph, lam: complex) -> complex:
    """(λ² - 1)^{m-n} det((λ² + 1)I_n - 2λP_n)."""
    lam = complex(lam)
    p = transition_matrix(g)
    det = lu_determinant((lam * lam + 1) * np.eye(g.n) - 2 * lam * p)
    return int_power(lam * lam - 1, g.m - g.n, lam) * det


def grover_characteristic_joukowsky(g: Graph, theta: float) -> complex:
    """
    Forme sur le cercle unité, λ = e^{iθ} :
    (λ² - 1)^{m-n} (2λ)^n det(cos θ·I_n - P_n).
    """
    lam = complex(math.cos(theta), math.sin(theta))
    p = transition_matrix(g)
    det = lu_determinant(math.cos(theta) * np.eye(g.n) - p)
    return int_power(lam * lam - 1, g.m - g.n, lam) * (2 * lam) ** g.n * det


# ==========================================
# Cycles réduits
# ==========================================

def _successors(g: Graph) -> List[List[int]]:
    """succ[e] = arcs f avec o(f) = t(e) et f ≠ e⁻¹."""
    arcs = g.arc_index
    out: List[List[int]] = []
    for e in range(len(arcs)):
        head = arcs.terminus(e)
        out.append([
            f for f in (arcs.index((head, x)) for x in g.adjacency[head])
            if f != arcs.inverse(e)
        ])
    return out


def count_closed_reduced(g: Graph, r: int) -> int:
    """
    Énumération exhaustive, indépendante de la matrice d'arêtes :
    suites (e_1, ..., e_r) avec t(e_i) = o(e_{i+1}), e_{i+1} ≠ e_i⁻¹,
    refermées par t(e_r) = o(e_1) et e_1 ≠ e_r⁻¹.
    """
    if r < 1:
        raise OutOfRangeError(f"cycle length must be >= 1, got {r}")
    succ = _successors(g)
    total = 0
    for start in range(len(succ)):
        # pile de (arc courant, longueur parcourue)
        stack = [(start, 1)]
        while stack:
            e, length = stack.pop()
            if length == r:
                if start in succ[e]:
                    total += 1
                continue
            for f in succ[e]:
                stack.append((f, length + 1))
    return total


def reduced_cycle_count(g: Graph, r: int, check: bool = True) -> int:
    """
    N_r = tr(B^r).
    Pour r ≤ CYCLE_ORACLE_MAX_R et 2m ≤ CYCLE_ORACLE_MAX_ARCS la trace est
    confrontée à l'énumération exhaustive.
    """
    if r < 1:
        raise OutOfRangeError(f"cycle length must be >= 1, got {r}")
    b = np.asarray(edge_matrix(g))
    count = int(round(float(np.trace(np.linalg.matrix_power(b, r)))))
    if check and r <= Config.CYCLE_ORACLE_MAX_R and 2 * g.m <= Config.CYCLE_ORACLE_MAX_ARCS:
        enumerated = count_closed_reduced(g, r)
        if enumerated != count:
            raise OracleMismatchError(f"N_{r}({g.name or 'graph'})", count, enumerated)
    return count


# ==========================================
# M_n et Λ^QW
# ==========================================

def m_spectrum(g: Graph, tol: float = Config.GROUPING_TOL) -> MSpectrum:
    """λ_M = 1 / (2(1 - λ_P)) ; λ_P = 1 donne +∞."""
    finite: List[MEntry] = []
    infinite = 0
    for entry in rw_spectrum(g, tol):
        lam = entry.value.real
        if abs(lam - 1.0) <= tol:
            infinite += entry.multiplicity
        else:
            finite.append(MEntry(0.5 / (1.0 - lam), entry.multiplicity))
    finite.sort(key=lambda e: e.value)
    return MSpectrum(tuple(finite), infinite)


def m_spectrum_via_laplacian(g: Graph, tol: float = Config.GROUPING_TOL) -> MSpectrum:
    """
    Graphe (q+1)-régulier : λ_M = (q+1) / (2λ_Δ) pour λ_Δ ≠ 0, +∞ sur le noyau de Δ_n.
    """
    if not is_regular(g):
        raise NotRegularError()
    degree = g.degrees[0]
    finite: List[MEntry] = []
    infinite = 0
    for entry in laplacian_spectrum(g, tol):
        lam = entry.value.real
        if abs(lam) <= tol:
            infinite += entry.multiplicity
        else:
            finite.append(MEntry(degree / (2.0 * lam), entry.multiplicity))
    finite.sort(key=lambda e: e.value)
    return MSpectrum(tuple(finite), infinite)


def lambda_qw_from_spectrum(spectrum: MSpectrum, s: complex) -> Tuple[complex, int]:
    """Partie finie Π (λ_M - s(1-s))^l et multiplicité des facteurs infinis omis."""
    s = complex(s)
    z = s * (1 - s)
    value = complex(1.0)
    for entry in spectrum.finite:
        value *= (entry.value - z) ** entry.multiplicity
    return value, spectrum.infinite_multiplicity


def lambda_qw_eval(g: Graph, s: complex) -> Tuple[complex, int]:
    """Λ^QW_G(s) = det(M_n - s(1-s)I_n), partie finie."""
    return lambda_qw_from_spectrum(m_spectrum(g), s)


# ==========================================
# Zéros
# ==========================================

def rho_of_theta(theta: float) -> Gamma:
    """
    ρ(θ) = 1/2 + (i/2) cot(θ/2) ; renvoie γ = Im ρ.
    ρ(0) = 1/2 + i·(+∞) est représenté par INFINITY.
    """
    if not 0.0 <= theta < 2 * math.pi:
        raise OutOfRangeError(f"theta={theta} is outside [0, 2*pi)")
    if theta <= Config.INFINITY_THETA_TOL:
        return INFINITY
    if abs(theta - math.pi) <= Config.INFINITY_THETA_TOL:
        return 0.0
    return 0.5 / math.tan(theta / 2)


def _merge(bucket: Dict[Gamma, int], gamma: Gamma, multiplicity: int, tol: float) -> None:
    if gamma is INFINITY:
        bucket[INFINITY] = bucket.get(INFINITY, 0) + multiplicity
        return
    key = next((k for k in bucket if k is not INFINITY and abs(k - gamma) <= tol), gamma)
    bucket[key] = bucket.get(key, 0) + multiplicity


def _entries(bucket: Dict[Gamma, int]) -> Tuple[ZeroEntry, ...]:
    entries = [ZeroEntry(gamma, mult) for gamma, mult in bucket.items() if mult > 0]
    entries.sort(key=lambda z: gamma_sort_key(z.gamma))
    return tuple(entries)


def qw_zero_set(g: Graph, tol: float = Config.GROUPING_TOL) -> ZeroSet:
    """
    Zero(Λ^QW_G) :
    (i) m > n : RW ∪ RW^c ; (ii) m = n : RW ; (iii) m < n : RW ∖ RW^c.
    λ_P = 1 donne [ρ(0)]^{2l} et λ_P = -1 donne [1/2]^{2l}.

    Λ^QW s'annule sur les zéros RW uniquement. Les zéros RW^c, soit
    [1/2 + i∞]^k et [1/2]^k avec k = |m - n|, viennent du facteur (λ² - 1)^{m-n}
    de det(λI - U) et ne sont pas des racines de det(M - s(1 - s)I) : pour K_4,
    Λ(1/2) = 1/512.
    """
    rw: Dict[Gamma, int] = {}
    for entry in rw_spectrum(g, tol):
        lam = entry.value.real
        l = entry.multiplicity
        if lam == 1.0:
            _merge(rw, INFINITY, 2 * l, Config.ZERO_TOL)
        elif lam == -1.0:
            _merge(rw, 0.0, 2 * l, Config.ZERO_TOL)
        else:
            gamma = rho_of_theta(joukowsky_angle(lam))
            _merge(rw, gamma, l, Config.ZERO_TOL)
            _merge(rw, -gamma, l, Config.ZERO_TOL)

    k = abs(g.m - g.n)
    rwc: Dict[Gamma, int] = {INFINITY: k, 0.0: k} if k else {}

    case = g.case_tag
    final = dict(rw)
    if case == CaseTag.M_GT_N:
        for gamma, mult in rwc.items():
            _merge(final, gamma, mult, Config.ZERO_TOL)
    elif case == CaseTag.M_LT_N:
        for gamma in (INFINITY, 0.0):
            available = final.get(gamma, 0)
            if available < k:
                raise RemovalUnderflowError("1/2 + i*inf" if gamma is INFINITY else 0.5, k, available)
            final[gamma] = available - k

    zero_set = ZeroSet(_entries(rw), _entries(rwc), case, _entries(final))
    logger.debug("Zero set of %s (%s): total multiplicity %d", g.describe(), case.value, zero_set.total)
    return zero_set
