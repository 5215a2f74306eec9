"""
Core module - Marches de Grover, fonctions zêta et Λ^QW d'un graphe.
"""

from .errors import (
    QWZetaError,
    GraphError,
    SpectralError,
    PoleError,
    OracleMismatchError,
)
from .models import (
    INFINITY,
    CaseTag,
    Graph,
    GraphFamily,
    Identity,
    MSpectrum,
    Operator,
    Spectrum,
    VerificationReport,
    ZeroSet,
)
from .graph import (
    complete_graph,
    cycle_graph,
    graph_from_edge_list,
    star_graph,
    standard_pool,
)
from .sources import resolve_graph_source
from .operators import build_walk_operators, grover_matrix, positive_support, transition_matrix
from .spectral import (
    grover_spectrum_direct,
    grover_spectrum_via_mapping,
    rw_spectrum,
    spectral_map,
)
from .zeta import (
    grover_zeta_reciprocal,
    ihara_reciprocal_bass,
    ihara_reciprocal_edge,
    konno_sato_rhs,
    lambda_qw_eval,
    m_spectrum,
    qw_zero_set,
    reduced_cycle_count,
    rho_of_theta,
)
from .verify import run_identity

__all__ = [
    'QWZetaError',
    'GraphError',
    'SpectralError',
    'PoleError',
    'OracleMismatchError',
    'INFINITY',
    'CaseTag',
    'Graph',
    'GraphFamily',
    'Identity',
    'MSpectrum',
    'Operator',
    'Spectrum',
    'VerificationReport',
    'ZeroSet',
    'complete_graph',
    'cycle_graph',
    'graph_from_edge_list',
    'star_graph',
    'standard_pool',
    'resolve_graph_source',
    'build_walk_operators',
    'grover_matrix',
    'positive_support',
    'transition_matrix',
    'grover_spectrum_direct',
    'grover_spectrum_via_mapping',
    'rw_spectrum',
    'spectral_map',
    'grover_zeta_reciprocal',
    'ihara_reciprocal_bass',
    'ihara_reciprocal_edge',
    'konno_sato_rhs',
    'lambda_qw_eval',
    'm_spectrum',
    'qw_zero_set',
    'reduced_cycle_count',
    'rho_of_theta',
    'run_identity',
]
