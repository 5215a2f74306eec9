"""
Routes API Flask : graphes, spectres, zéros, zêtas et vérifications.
Mêmes opérations que la ligne de commande, réponses JSON.
"""

from flask import Blueprint, current_app, jsonify, request

from config import VERSION
from core.errors import QWZetaError
from core.export import (
    graph_to_dict,
    jsonable,
    m_spectrum_to_dict,
    report_to_dict,
    spectrum_to_dict,
    zero_set_to_dict,
)
from core.graph import graph_from_edge_list
from core.models import Graph, Identity, Operator
from core.sources import graph_size_hint, parse_complex_point, resolve_graph_source
from core.spectral import (
    edge_spectrum,
    grover_spectrum_direct,
    grover_spectrum_via_mapping,
    laplacian_spectrum,
    rw_spectrum,
    support_spectrum,
)
from core.verify import run_identity
from core.zeta import (
    grover_zeta_reciprocal,
    ihara_reciprocal_bass,
    ihara_reciprocal_edge,
    konno_sato_rhs,
    lambda_qw_eval,
    m_spectrum,
    qw_zero_set,
)
from presets import get_presets

# Blueprint pour les routes API
api_bp = Blueprint('api', __name__)


class RequestTooLarge(Exception):
    """Graphe ou nombre d'échantillons au-delà des limites de configuration."""


def _check_size(n: int, arcs: int) -> None:
    limit = current_app.config['MAX_GRAPH_ORDER']
    if n > limit:
        raise RequestTooLarge(f"graph order {n} exceeds the limit of {limit}")
    limit = current_app.config['MAX_ARCS']
    if arcs > limit:
        raise RequestTooLarge(f"graph has {arcs} arcs, above the limit of {limit}")


def _load(source: str) -> Graph:
    """Seules les specs de famille et les presets sont acceptés (pas de fichiers)."""
    hint = graph_size_hint(source)
    if hint is not None:
        _check_size(*hint)
    seed = request.args.get('seed', type=int)
    g = resolve_graph_source(source, seed=seed, allow_files=False)
    _check_size(g.n, 2 * g.m)
    return g


def _arg_float(name: str, default: float) -> float:
    value = request.args.get(name, type=float)
    return default if value is None else value


@api_bp.errorhandler(QWZetaError)
def _handle_lab_error(e):
    current_app.logger.info("Rejected request %s: %s", request.path, e)
    return jsonify({'error': str(e)}), 400


@api_bp.errorhandler(ValueError)
def _handle_value_error(e):
    return jsonify({'error': str(e)}), 400


@api_bp.errorhandler(RequestTooLarge)
def _handle_too_large(e):
    return jsonify({'error': str(e)}), 413


@api_bp.route('/', methods=['GET'])
def index():
    """Version et liste des endpoints."""
    return jsonify({
        'name': 'qwzeta',
        'version': VERSION,
        'endpoints': [
            'GET /presets',
            'GET /graphs/<source>',
            'GET /graphs/<source>/spectrum?operator=&method=&tol=',
            'GET /graphs/<source>/zeros',
            'GET /graphs/<source>/zeta?u=re,im&s=re,im',
            'GET /graphs/<source>/verify?identity=&samples=&seed=&radius=',
            'POST /analyze',
        ],
    })


@api_bp.route('/presets', methods=['GET'])
def list_presets():
    """Liste des graphes nommés."""
    return jsonify([
        {'id': preset_id, 'name': p.get('name', preset_id), 'description': p.get('description', '')}
        for preset_id, p in sorted(get_presets().items())
    ])


@api_bp.route('/graphs/<source>', methods=['GET'])
def graph_summary(source: str):
    return jsonify(graph_to_dict(_load(source)))


@api_bp.route('/graphs/<source>/spectrum', methods=['GET'])
def graph_spectrum(source: str):
    g = _load(source)
    operator = Operator(request.args.get('operator', Operator.RW.value))
    method = request.args.get('method', 'direct')
    tol = _arg_float('tol', current_app.config['GROUPING_TOL'])
    if tol <= 0:
        raise ValueError("tol must be positive")

    if operator == Operator.RW:
        spectrum = rw_spectrum(g, tol)
    elif operator == Operator.GROVER:
        spectrum = grover_spectrum_via_mapping(g, tol) if method == 'mapping' else grover_spectrum_direct(g, tol)
    elif operator == Operator.GROVER_SUPPORT:
        spectrum = support_spectrum(g, tol)
    elif operator == Operator.LAPLACIAN:
        spectrum = laplacian_spectrum(g, tol)
    elif operator == Operator.EDGE:
        spectrum = edge_spectrum(g, tol)
    else:
        raise ValueError(f"no spectrum for operator {operator.value!r}")

    payload = spectrum_to_dict(spectrum)
    payload.update({'graph': g.name, 'operator': operator.value})
    return jsonify(payload)


@api_bp.route('/graphs/<source>/zeros', methods=['GET'])
def graph_zeros(source: str):
    g = _load(source)
    payload = zero_set_to_dict(qw_zero_set(g))
    payload['m_spectrum'] = m_spectrum_to_dict(m_spectrum(g))
    return jsonify(payload)


@api_bp.route('/graphs/<source>/zeta', methods=['GET'])
def graph_zeta(source: str):
    g = _load(source)
    payload = {'graph': g.name}
    if 'u' in request.args:
        u = parse_complex_point(request.args['u'])
        payload['u'] = {
            'point': jsonable(u),
            'ihara_bass': jsonable(ihara_reciprocal_bass(g, u)),
            'ihara_edge': jsonable(ihara_reciprocal_edge(g, u)),
            'grover': jsonable(grover_zeta_reciprocal(g, u)),
            'konno_sato_rhs': jsonable(konno_sato_rhs(g, u)),
        }
    if 's' in request.args:
        s = parse_complex_point(request.args['s'])
        value, infinite = lambda_qw_eval(g, s)
        payload['s'] = {'point': jsonable(s), 'lambda_qw': jsonable(value), 'infinite_factors': infinite}
    if len(payload) == 1:
        raise ValueError("pass at least one of u or s")
    return jsonify(payload)


@api_bp.route('/graphs/<source>/verify', methods=['GET'])
def graph_verify(source: str):
    g = _load(source)
    identity = Identity(request.args.get('identity', Identity.ALL.value))
    samples = request.args.get('samples', current_app.config['DEFAULT_SAMPLES'], type=int)
    if samples > current_app.config['MAX_SAMPLES']:
        raise RequestTooLarge(f"samples {samples} exceeds the limit of {current_app.config['MAX_SAMPLES']}")
    reports = run_identity(
        g,
        identity,
        num_samples=samples,
        radius=_arg_float('radius', current_app.config['DEFAULT_RADIUS']),
        seed=request.args.get('seed', current_app.config['DEFAULT_SEED'], type=int),
    )
    return jsonify({
        'graph': g.name,
        'passed': all(r.passed for r in reports),
        'reports': [report_to_dict(r) for r in reports],
    })


@api_bp.route('/analyze', methods=['POST'])
def analyze():
    """Analyse d'un graphe fourni en liste d'arêtes : {"edges": [[u, v], ...]}."""
    data = request.get_json(silent=True) or {}
    edges = data.get('edges')
    if not isinstance(edges, list):
        raise ValueError("body must be a JSON object with an 'edges' list")
    pairs = []
    for edge in edges:
        if not isinstance(edge, (list, tuple)) or len(edge) != 2:
            raise ValueError(f"edge {edge!r} is not a pair")
        pairs.append(tuple(edge))

    g = graph_from_edge_list(pairs, name=str(data.get('name', '')))
    _check_size(g.n, 2 * g.m)
    return jsonify({
        'graph': graph_to_dict(g),
        'rw_spectrum': spectrum_to_dict(rw_spectrum(g)),
        'm_spectrum': m_spectrum_to_dict(m_spectrum(g)),
        'zeros': zero_set_to_dict(qw_zero_set(g)),
    })
