"""
Spectres de P_n et de U_{2m}, transformée de Joukowsky, théorème de
correspondance spectrale et assemblage de Spec(U_{2m}) selon les trois cas
m > n, m = n, m < n.
"""

import logging
import math
from typing import Dict, List, Sequence, Tuple

import numpy as np
import scipy.linalg as spl
from scipy.cluster.hierarchy import fcluster, linkage

from config import Config
from .errors import (
    AmbiguousClusteringError,
    EigensolveError,
    OutOfRangeError,
    RemovalUnderflowError,
)
from .models import AngleEntry, AngleSpectrum, Graph, Spectrum
from .operators import edge_matrix, grover_matrix, laplacian, positive_support

logger = logging.getLogger(__name__)


def _clamp_unit(value: float, clamp_tol: float) -> float:
    if abs(value) > 1.0 + clamp_tol:
        raise OutOfRangeError(f"|{value}| exceeds 1 by more than {clamp_tol:g}")
    return min(1.0, max(-1.0, float(value)))


def group_multiplicities(raw: Sequence[complex], tol: float = Config.GROUPING_TOL) -> Spectrum:
    """
    Regroupe des valeurs propres brutes en [λ]^l par chaînage simple à distance tol.
    Le représentant d'un groupe est la moyenne de ses membres.
    """
    if tol <= 0:
        raise ValueError("grouping tolerance must be positive")
    values = np.asarray(list(raw), dtype=np.complex128)
    if values.size == 0:
        return Spectrum((), tol)
    if values.size == 1:
        return Spectrum.from_pairs([(values[0], 1)], tol)

    points = np.column_stack([values.real, values.imag])
    labels = fcluster(linkage(points, method='single'), t=tol, criterion='distance')

    pairs: List[Tuple[complex, int]] = []
    for label in np.unique(labels):
        members = values[labels == label]
        pairs.append((complex(members.mean()), int(members.size)))

    representatives = [p[0] for p in pairs]
    for i in range(len(representatives)):
        for j in range(i + 1, len(representatives)):
            if abs(representatives[i] - representatives[j]) <= tol:
                raise AmbiguousClusteringError(representatives[i], representatives[j], tol)
    return Spectrum.from_pairs(pairs, tol)


def rw_spectrum(g: Graph, tol: float = Config.GROUPING_TOL,
                clamp_tol: float = Config.CLAMP_TOL) -> Spectrum:
    """
    Spec(P_n) via la similitude symétrique N = D^{-1/2} A D^{-1/2}.
    Les valeurs dans tol de ±1 sont ramenées exactement sur ±1
    (1 est toujours valeur propre, -1 l'est ssi G est biparti).
    """
    inv_sqrt = 1.0 / np.sqrt(np.asarray(g.degrees, dtype=np.float64))
    a = np.zeros((g.n, g.n), dtype=np.float64)
    for u, v in g.edges:
        a[u, v] = a[v, u] = inv_sqrt[u] * inv_sqrt[v]
    try:
        eigenvalues = spl.eigvalsh(a)
    except np.linalg.LinAlgError as e:
        raise EigensolveError(f"symmetric eigensolve failed for {g.describe()}: {e}") from e

    cleaned: List[float] = []
    for lam in eigenvalues:
        if abs(lam) > 1.0:
            logger.debug("Clamping eigenvalue %r of P into [-1, 1]", lam)
        lam = _clamp_unit(lam, clamp_tol)
        if abs(lam - 1.0) <= tol:
            lam = 1.0
        elif abs(lam + 1.0) <= tol:
            lam = -1.0
        cleaned.append(lam)
    spectrum = group_multiplicities([complex(x, 0.0) for x in cleaned], tol)
    # représentants réels exacts
    return Spectrum.from_pairs([(complex(e.value.real, 0.0), e.multiplicity) for e in spectrum], tol)


def grover_spectrum_direct(g: Graph, tol: float = Config.GROUPING_TOL) -> Spectrum:
    """Spec(U_{2m}) par eigensolve général (oracle indépendant de la correspondance)."""
    u = grover_matrix(g)
    try:
        eigenvalues = spl.eigvals(u)
    except np.linalg.LinAlgError as e:
        raise EigensolveError(f"eigensolve of U failed for {g.describe()}: {e}") from e
    moduli = np.abs(eigenvalues)
    worst = float(np.max(np.abs(moduli - 1.0))) if moduli.size else 0.0
    if worst > Config.UNIT_MODULUS_TOL:
        raise EigensolveError(f"eigenvalue of U off the unit circle by {worst:g}")
    return group_multiplicities(eigenvalues, tol)


def support_spectrum(g: Graph, tol: float = Config.GROUPING_TOL) -> Spectrum:
    """Valeurs propres du support positif littéral U⁺."""
    try:
        eigenvalues = spl.eigvals(positive_support(grover_matrix(g)))
    except np.linalg.LinAlgError as e:
        raise EigensolveError(f"eigensolve of U+ failed for {g.describe()}: {e}") from e
    return group_multiplicities(eigenvalues, tol)


def edge_spectrum(g: Graph, tol: float = Config.GROUPING_TOL) -> Spectrum:
    try:
        eigenvalues = spl.eigvals(edge_matrix(g))
    except np.linalg.LinAlgError as e:
        raise EigensolveError(f"eigensolve of the edge matrix failed for {g.describe()}: {e}") from e
    return group_multiplicities(eigenvalues, tol)


def laplacian_spectrum(g: Graph, tol: float = Config.GROUPING_TOL) -> Spectrum:
    try:
        eigenvalues = spl.eigvalsh(laplacian(g))
    except np.linalg.LinAlgError as e:
        raise EigensolveError(f"eigensolve of the Laplacian failed for {g.describe()}: {e}") from e
    eigenvalues = [0.0 if abs(x) <= tol else float(x) for x in eigenvalues]
    spectrum = group_multiplicities([complex(x, 0.0) for x in eigenvalues], tol)
    return Spectrum.from_pairs([(complex(e.value.real, 0.0), e.multiplicity) for e in spectrum], tol)


# ==========================================
# Correspondance spectrale
# ==========================================

def spectral_map(lambda_p: float, clamp_tol: float = Config.CLAMP_TOL) -> Tuple[complex, complex]:
    """λ_P ↦ λ_P ± i√(1 - λ_P²), racines de λ² + 1 - 2λ_P λ = 0."""
    lam = _clamp_unit(lambda_p, clamp_tol)
    s = math.sqrt(max(0.0, 1.0 - lam * lam))
    return complex(lam, s), complex(lam, -s)


def joukowsky_angle(lambda_p: float, clamp_tol: float = Config.CLAMP_TOL) -> float:
    """θ = arccos λ_P ∈ [0, π]."""
    return math.acos(_clamp_unit(lambda_p, clamp_tol))


def joukowsky_transform(lam: complex) -> float:
    """cos θ = (λ + λ̄)/2 pour λ = e^{iθ}."""
    lam = complex(lam)
    return ((lam + lam.conjugate()) / 2).real


def angle_spectrum(g: Graph, tol: float = Config.GROUPING_TOL) -> AngleSpectrum:
    entries = [AngleEntry(joukowsky_angle(e.value.real), e.multiplicity) for e in rw_spectrum(g, tol)]
    entries.sort(key=lambda a: a.theta)
    return AngleSpectrum(tuple(entries))


def _bump(bucket: Dict[complex, int], target: complex, delta: int, tol: float) -> None:
    """Ajoute (delta > 0) ou retire (delta < 0) des copies de target."""
    key = next((k for k in bucket if abs(k - target) <= tol), None)
    if delta >= 0:
        if key is None:
            bucket[target] = delta
        else:
            bucket[key] += delta
        return
    available = bucket.get(key, 0) if key is not None else 0
    if available < -delta:
        raise RemovalUnderflowError(target, -delta, available)
    bucket[key] = available + delta
    if bucket[key] == 0:
        del bucket[key]


def grover_spectrum_partition(g: Graph, tol: float = Config.GROUPING_TOL) -> Tuple[Spectrum, Spectrum]:
    """
    (Spec(U : RW), Spec(U : RW^c)).
    RW : chaque λ_P donne sa paire conjuguée (paire dégénérée comptée deux fois en ±1).
    RW^c : [1]^{|m-n|}, [-1]^{|m-n|}.
    """
    rw: Dict[complex, int] = {}
    for entry in rw_spectrum(g, tol):
        for value in spectral_map(entry.value.real):
            _bump(rw, value, entry.multiplicity, tol)
    k = abs(g.m - g.n)
    rwc = [(complex(1.0), k), (complex(-1.0), k)] if k else []
    return Spectrum.from_pairs(rw.items(), tol), Spectrum.from_pairs(rwc, tol)


def grover_spectrum_via_mapping(g: Graph, tol: float = Config.GROUPING_TOL) -> Spectrum:
    """
    Spec(U_{2m}) assemblé depuis Spec(P_n) :
    (i) m > n : RW ∪ RW^c ; (ii) m = n : RW ; (iii) m < n : RW ∖ RW^c.
    """
    rw, _ = grover_spectrum_partition(g, tol)
    bucket: Dict[complex, int] = {e.value: e.multiplicity for e in rw}
    k = g.m - g.n
    if k:
        _bump(bucket, complex(1.0), k, tol)
        _bump(bucket, complex(-1.0), k, tol)
    spectrum = Spectrum.from_pairs(bucket.items(), tol)
    logger.debug("Mapped spectrum of %s: %d distinct values, total %d", g.describe(), len(spectrum), spectrum.total)
    return spectrum


def match_spectra(a: Spectrum, b: Spectrum, radius: float = Config.MATCH_RADIUS) -> float:
    """
    Appariement glouton au plus proche entre deux multiensembles.
    Retourne la plus grande distance appariée, ou inf si les tailles diffèrent
    ou si une paire dépasse radius.
    """
    left = np.asarray(a.values(), dtype=np.complex128)
    right = np.asarray(b.values(), dtype=np.complex128)
    if left.size != right.size:
        return math.inf
    if left.size == 0:
        return 0.0
    distances = np.abs(left[:, None] - right[None, :])
    order = np.argsort(distances, axis=None, kind='stable')
    used_left = np.zeros(left.size, dtype=bool)
    used_right = np.zeros(right.size, dtype=bool)
    worst = 0.0
    matched = 0
    for flat in order:
        i, j = divmod(int(flat), right.size)
        if used_left[i] or used_right[j]:
            continue
        d = float(distances[i, j])
        if d > radius:
            return math.inf
        used_left[i] = used_right[j] = True
        worst = max(worst, d)
        matched += 1
        if matched == left.size:
            break
    return worst
