"""
Vérifications numériques des identités.
Chaque vérification renvoie un VerificationReport ; un échec n'est jamais levé.
"""

import cmath
import logging
import math
from typing import Callable, Iterable, List, Optional

import numpy as np

from config import Config
from .errors import QWZetaError
from .graph import is_bipartite
from .models import Graph, Identity, Sample, VerificationReport
from .spectral import grover_spectrum_direct, grover_spectrum_via_mapping, match_spectra
from .zeta import (
    grover_characteristic_joukowsky,
    grover_characteristic_lhs,
    grover_characteristic_rhs,
    grover_zeta_reciprocal,
    ihara_reciprocal_bass,
    ihara_reciprocal_edge,
    konno_sato_rhs,
    lambda_qw_from_spectrum,
    m_spectrum,
    qw_zero_set,
)

logger = logging.getLogger(__name__)


def relative_residual(lhs: complex, rhs: complex) -> float:
    """|lhs - rhs| / max(1, |lhs|, |rhs|)."""
    return abs(lhs - rhs) / max(1.0, abs(lhs), abs(rhs))


def sample_disk(rng: np.random.Generator, radius: float) -> complex:
    """Point uniforme dans le disque |u| ≤ radius."""
    r = radius * math.sqrt(rng.random())
    phi = 2 * math.pi * rng.random()
    return complex(r * math.cos(phi), r * math.sin(phi))


def sample_box(rng: np.random.Generator, box=Config.FUNCTIONAL_EQ_BOX) -> complex:
    """Point uniforme dans [re_min, re_max] x [im_min, im_max]."""
    re_min, re_max, im_min, im_max = box
    return complex(rng.uniform(re_min, re_max), rng.uniform(im_min, im_max))


def _check_sampling(num_samples: int, radius: Optional[float] = None) -> None:
    if num_samples < 1:
        raise ValueError("num_samples must be >= 1")
    if radius is not None and radius <= 0:
        raise ValueError("radius must be positive")


def _evaluate(point, lhs_fn: Callable, rhs_fn: Callable) -> Sample:
    try:
        lhs = lhs_fn(point)
        rhs = rhs_fn(point)
    except QWZetaError as e:
        logger.warning("Evaluation failed at %s: %s", point, e)
        return Sample(point, math.nan, math.nan, math.inf, math.inf)
    return Sample(point, lhs, rhs, abs(lhs - rhs), relative_residual(lhs, rhs))


def _disk_points(g: Graph, num_samples: int, radius: float, seed: int) -> Iterable[complex]:
    """Tirages dans le disque, en écartant u² ≈ 1 quand m ≠ n."""
    rng = np.random.default_rng(seed)
    drawn = 0
    attempts = 0
    while drawn < num_samples and attempts < 100 * num_samples:
        attempts += 1
        u = sample_disk(rng, radius)
        if g.m != g.n and abs(u * u - 1) < Config.POLE_SKIP:
            logger.debug("Skipping u=%s near the pole u^2 = 1", u)
            continue
        drawn += 1
        yield u


def verify_konno_sato(g: Graph, num_samples: int = Config.DEFAULT_SAMPLES,
                      radius: float = Config.DEFAULT_RADIUS, tol: float = Config.IDENTITY_TOL,
                      seed: int = Config.DEFAULT_SEED) -> VerificationReport:
    """det(I - uU) contre (1 - u²)^{m-n} det((1 + u²)I - 2uP)."""
    _check_sampling(num_samples, radius)
    samples = [
        _evaluate(u, lambda x: grover_zeta_reciprocal(g, x), lambda x: konno_sato_rhs(g, x))
        for u in _disk_points(g, num_samples, radius, seed)
    ]
    return VerificationReport.from_samples("konno-sato", samples, tol, g.name)


def verify_ihara_bass(g: Graph, num_samples: int = Config.DEFAULT_SAMPLES,
                      radius: float = Config.DEFAULT_RADIUS, tol: float = Config.IDENTITY_TOL,
                      seed: int = Config.DEFAULT_SEED) -> VerificationReport:
    """det(I - uB) contre la forme de Bass."""
    _check_sampling(num_samples, radius)
    samples = [
        _evaluate(u, lambda x: ihara_reciprocal_edge(g, x), lambda x: ihara_reciprocal_bass(g, x))
        for u in _disk_points(g, num_samples, radius, seed)
    ]
    return VerificationReport.from_samples("ihara-bass", samples, tol, g.name)


def verify_spectral_mapping(g: Graph, grouping_tol: float = Config.GROUPING_TOL,
                            radius: float = Config.MATCH_RADIUS) -> VerificationReport:
    """Spec(U) par eigensolve direct contre Spec(U) reconstruit depuis Spec(P)."""
    try:
        direct = grover_spectrum_direct(g, grouping_tol)
        mapped = grover_spectrum_via_mapping(g, grouping_tol)
    except QWZetaError as e:
        logger.warning("Spectral mapping check failed on %s: %s", g.describe(), e)
        sample = Sample("Spec(U)", math.nan, math.nan, math.inf, math.inf)
        return VerificationReport.from_samples("spectral-map", [sample], radius, g.name)

    distance = match_spectra(direct, mapped, radius)
    samples = [Sample("Spec(U)", direct.total, mapped.total, distance, distance)]
    # mêmes groupes avec les mêmes multiplicités
    if len(direct) != len(mapped):
        samples.append(Sample("groups", len(direct), len(mapped), math.inf, math.inf))
    else:
        worst = max(
            (0.0 if mapped.multiplicity_at(e.value, radius) == e.multiplicity else math.inf
             for e in direct),
            default=0.0,
        )
        samples.append(Sample("multiplicities", direct.total, mapped.total, worst, worst))
    return VerificationReport.from_samples("spectral-map", samples, radius, g.name)


def verify_characteristic_polynomial(g: Graph, num_samples: int = Config.DEFAULT_SAMPLES,
                                     tol: float = Config.IDENTITY_TOL,
                                     seed: int = Config.DEFAULT_SEED) -> VerificationReport:
    """
    det(λI - U) contre (λ² - 1)^{m-n} det((λ² + 1)I - 2λP) et contre la forme
    de Joukowsky, en λ = e^{iθ} tiré uniformément sur le cercle unité.
    """
    _check_sampling(num_samples)
    rng = np.random.default_rng(seed)
    samples: List[Sample] = []
    while len(samples) < 2 * num_samples:
        theta = 2 * math.pi * rng.random()
        lam = complex(math.cos(theta), math.sin(theta))
        if g.m < g.n and abs(lam * lam - 1) < Config.POLE_SKIP:
            continue
        samples.append(_evaluate(
            lam, lambda x: grover_characteristic_lhs(g, x), lambda x: grover_characteristic_rhs(g, x)))
        samples.append(_evaluate(
            theta, lambda t: grover_characteristic_lhs(g, complex(math.cos(t), math.sin(t))),
            lambda t: grover_characteristic_joukowsky(g, t)))
    return VerificationReport.from_samples("char-poly", samples, tol, g.name)


def verify_reduced_cycles(g: Graph, max_r: int = Config.CYCLE_ORACLE_MAX_R,
                          max_arcs: int = Config.CYCLE_ORACLE_MAX_ARCS) -> VerificationReport:
    """N_r = tr(B^r) contre l'énumération exhaustive, r = 1..max_r."""
    from oracles import get_oracle

    oracle = get_oracle('enumeration', {'max_length': max_r, 'max_arcs': max_arcs})
    samples = []
    for result in oracle.cross_check(g):
        residual = float(abs(result.expected - result.observed))
        samples.append(Sample(result.check, result.expected, result.observed, residual, residual))
    if not samples:
        logger.info("Reduced-cycle enumeration skipped for %s", g.describe())
    return VerificationReport.from_samples("cycles", samples, 0.0, g.name)


def verify_structure(g: Graph, tol: float = Config.GROUPING_TOL) -> VerificationReport:
    """Contrôles structurels par networkx."""
    from oracles import get_oracle

    oracle = get_oracle('networkx', {'tolerance': tol})
    samples = []
    for result in oracle.cross_check(g):
        residual = 0.0 if result.passed else 1.0
        samples.append(Sample(result.check, result.expected, result.observed, residual, residual))
    if not samples:
        logger.warning("Structural oracle produced no checks for %s", g.describe())
    return VerificationReport.from_samples("structure", samples, 0.0, g.name)


def verify_functional_equation(g: Graph, num_samples: int = Config.FUNCTIONAL_EQ_SAMPLES,
                               seed: int = Config.DEFAULT_SEED,
                               tol: float = Config.ZERO_TOL,
                               grouping_tol: float = Config.GROUPING_TOL) -> VerificationReport:
    """|Λ(s) - Λ(1-s)| ≤ tol · max(1, |Λ(s)|) pour s dans [-2, 3] x [-3i, 3i]."""
    _check_sampling(num_samples)
    spectrum = m_spectrum(g, grouping_tol)
    rng = np.random.default_rng(seed)
    samples = []
    for _ in range(num_samples):
        s = sample_box(rng)
        lhs, _ = lambda_qw_from_spectrum(spectrum, s)
        rhs, _ = lambda_qw_from_spectrum(spectrum, 1 - s)
        residual = abs(lhs - rhs)
        samples.append(Sample(s, lhs, rhs, residual, residual / max(1.0, abs(lhs))))
    return VerificationReport.from_samples("functional-eq", samples, tol, g.name)


def verify_riemann_hypothesis(g: Graph, tol: float = Config.ZERO_TOL,
                              grouping_tol: float = Config.GROUPING_TOL) -> VerificationReport:
    """
    (a) λ_M ≥ 1/4 pour tout λ_M fini ;
    (b) les racines de s² - s + λ_M = 0 ont Re = 1/2 et Im parmi les γ de l'ensemble des zéros ;
    (c) G biparti ⇔ 1/4 ∈ Spec(M).
    """
    spectrum = m_spectrum(g, grouping_tol)
    zeros = qw_zero_set(g, grouping_tol)
    gammas = [z.gamma for z in zeros.finite()]
    samples: List[Sample] = []

    for entry in spectrum.finite:
        lam_m = entry.value
        shortfall = max(0.0, 0.25 - Config.RH_LOWER_TOL - lam_m)
        samples.append(Sample(lam_m, lam_m, 0.25, shortfall, shortfall))

        discriminant = 1.0 - 4.0 * lam_m
        if shortfall == 0.0:
            # λ_M = 1/4 à l'arrondi près : racine double
            discriminant = min(0.0, discriminant)
        root = cmath.sqrt(complex(discriminant))
        for rho in ((1 + root) / 2, (1 - root) / 2):
            off_line = abs(rho.real - 0.5)
            distance = min((abs(rho.imag - gamma) for gamma in gammas), default=math.inf)
            residual = max(off_line, distance)
            samples.append(Sample(rho, rho.real, 0.5, residual, residual))

    bipartite = is_bipartite(g)
    has_quarter = any(abs(e.value - 0.25) <= Config.RH_LOWER_TOL for e in spectrum.finite)
    mismatch = 0.0 if bipartite == has_quarter else math.inf
    samples.append(Sample("bipartite", float(bipartite), float(has_quarter), mismatch, mismatch))
    return VerificationReport.from_samples("rh", samples, tol, g.name)


_ALL = (
    Identity.KONNO_SATO,
    Identity.IHARA_BASS,
    Identity.SPECTRAL_MAP,
    Identity.CHAR_POLY,
    Identity.CYCLES,
    Identity.STRUCTURE,
    Identity.FUNCTIONAL_EQ,
    Identity.RH,
)


def run_identity(g: Graph, identity: Identity, num_samples: Optional[int] = None,
                 radius: Optional[float] = None, seed: Optional[int] = None,
                 grouping_tol: Optional[float] = None) -> List[VerificationReport]:
    """Exécute une identité (ou toutes avec Identity.ALL) sur un graphe."""
    num_samples = Config.DEFAULT_SAMPLES if num_samples is None else num_samples
    radius = Config.DEFAULT_RADIUS if radius is None else radius
    seed = Config.DEFAULT_SEED if seed is None else seed
    grouping_tol = Config.GROUPING_TOL if grouping_tol is None else grouping_tol

    if identity == Identity.ALL:
        reports: List[VerificationReport] = []
        for single in _ALL:
            reports.extend(run_identity(g, single, num_samples, radius, seed, grouping_tol))
        return reports

    logger.debug("Running %s on %s", identity.value, g.describe())
    if identity == Identity.KONNO_SATO:
        return [verify_konno_sato(g, num_samples, radius, seed=seed)]
    if identity == Identity.IHARA_BASS:
        return [verify_ihara_bass(g, num_samples, radius, seed=seed)]
    if identity == Identity.SPECTRAL_MAP:
        return [verify_spectral_mapping(g, grouping_tol)]
    if identity == Identity.CHAR_POLY:
        return [verify_characteristic_polynomial(g, num_samples, seed=seed)]
    if identity == Identity.CYCLES:
        return [verify_reduced_cycles(g)]
    if identity == Identity.STRUCTURE:
        return [verify_structure(g)]
    if identity == Identity.FUNCTIONAL_EQ:
        return [verify_functional_equation(g, Config.FUNCTIONAL_EQ_SAMPLES, seed,
                                           grouping_tol=grouping_tol)]
    if identity == Identity.RH:
        return [verify_riemann_hypothesis(g, grouping_tol=grouping_tol)]
    raise ValueError(f"unknown identity {identity!r}")
