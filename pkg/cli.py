#!/usr/bin/env python3
"""
Command-line interface for qwzeta.

Works directly against the computation engine (core); no running server is
needed.

Once installed (`pip install .`), use the `qwzeta` command:
    qwzeta zeros --graph cycle:3
    qwzeta spectrum --graph complete:4 --operator rw --format json
    qwzeta verify --graph star:6 --identity konno-sato --samples 20
    qwzeta zeta --graph named:petersen --u 0.1,0.2 --s 0.5,1
    qwzeta export --graph cycle:4 --operator grover --format csv --out u8.csv

Without installing, run this file directly instead:
    python cli.py zeros --graph cycle:3

Exit codes: 0 on success, 1 when a verification fails, 2 on usage or input errors.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from config import Config, VERSION
from core.errors import QWZetaError
from core.export import (
    FORMATS,
    fmt_complex,
    jsonable,
    render_angles,
    render_graph,
    render_m_spectrum,
    render_matrix,
    render_reports,
    render_spectrum,
    render_zero_set,
    to_json,
)
from core.models import Graph, Identity, Operator
from core.operators import build_walk_operators
from core.sources import parse_complex_point, resolve_graph_source
from core.spectral import (
    angle_spectrum,
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
    reduced_cycle_count,
)

logger = logging.getLogger('qwzeta')

SPECTRUM_OPERATORS = [
    Operator.RW.value,
    Operator.GROVER.value,
    Operator.GROVER_SUPPORT.value,
    Operator.LAPLACIAN.value,
    Operator.EDGE.value,
]


class UsageError(Exception):
    """Invalid flag combination detected after parsing."""


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}")
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text!r}")
    return value


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {text!r}")
    return value


def _complex_point(text: str) -> complex:
    try:
        return parse_complex_point(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _write_output(path: Optional[str], content: str) -> None:
    if path:
        Path(path).write_text(content, encoding='utf-8')
    else:
        sys.stdout.write(content)


def _graph(args: argparse.Namespace) -> Graph:
    g = resolve_graph_source(args.graph, seed=args.seed)
    logger.info("Loaded %s", g.describe())
    return g


# ==========================================
# Commands
# ==========================================

def cmd_gen(args: argparse.Namespace) -> int:
    _write_output(args.out, render_graph(_graph(args), args.format))
    return 0


def cmd_spectrum(args: argparse.Namespace) -> int:
    g = _graph(args)
    operator = Operator(args.operator)
    if args.method == 'mapping' and operator != Operator.GROVER:
        raise UsageError("--method mapping only applies to --operator grover")

    if args.angles:
        if operator != Operator.RW:
            raise UsageError("--angles only applies to --operator rw")
        _write_output(args.out, render_angles(angle_spectrum(g, args.tol), args.format))
        return 0

    if operator == Operator.RW:
        spectrum = rw_spectrum(g, args.tol)
    elif operator == Operator.GROVER:
        if args.method == 'mapping':
            spectrum = grover_spectrum_via_mapping(g, args.tol)
        else:
            spectrum = grover_spectrum_direct(g, args.tol)
    elif operator == Operator.GROVER_SUPPORT:
        spectrum = support_spectrum(g, args.tol)
    elif operator == Operator.LAPLACIAN:
        spectrum = laplacian_spectrum(g, args.tol)
    else:
        spectrum = edge_spectrum(g, args.tol)

    _write_output(args.out, render_spectrum(spectrum, args.format, name=f"Spec({operator.value}) of {g.describe()}"))
    return 0


def cmd_zeros(args: argparse.Namespace) -> int:
    g = _graph(args)
    if args.m_spectrum:
        _write_output(args.out, render_m_spectrum(m_spectrum(g, args.tol), args.format))
    else:
        _write_output(args.out, render_zero_set(qw_zero_set(g, args.tol), args.format))
    return 0


def cmd_zeta(args: argparse.Namespace) -> int:
    g = _graph(args)
    if args.u is None and args.s is None and args.cycles is None:
        raise UsageError("zeta needs at least one of --u, --s or --cycles")

    results = {"graph": g.name, "n": g.n, "m": g.m}
    if args.u is not None:
        u = args.u
        results["u"] = {
            "point": u,
            "ihara_bass": ihara_reciprocal_bass(g, u),
            "ihara_edge": ihara_reciprocal_edge(g, u),
            "grover": grover_zeta_reciprocal(g, u),
            "konno_sato_rhs": konno_sato_rhs(g, u),
        }
    if args.s is not None:
        value, infinite = lambda_qw_eval(g, args.s)
        results["s"] = {"point": args.s, "lambda_qw": value, "infinite_factors": infinite}
    if args.cycles is not None:
        results["cycles"] = {f"N_{r}": reduced_cycle_count(g, r) for r in range(1, args.cycles + 1)}

    if args.format == 'json':
        payload = {
            key: ({k: jsonable(v) for k, v in value.items()} if isinstance(value, dict) else value)
            for key, value in results.items()
        }
        _write_output(args.out, to_json(payload))
        return 0

    lines = [f"# {g.describe()}"]
    for section in ("u", "s", "cycles"):
        for key, value in results.get(section, {}).items():
            shown = fmt_complex(value) if isinstance(value, complex) else str(value)
            lines.append(f"{section}.{key},{shown}" if args.format == 'csv' else f"{key:<16} {shown}")
    if args.format == 'csv':
        lines = ["key,value"] + lines[1:]
    _write_output(args.out, "\n".join(lines) + "\n")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    g = _graph(args)
    reports = run_identity(
        g,
        Identity(args.identity),
        num_samples=args.samples,
        radius=args.radius,
        seed=args.seed,
        grouping_tol=args.tol,
    )
    _write_output(args.out, render_reports(reports, args.format))
    failed = [r.identity_name for r in reports if not r.passed]
    if failed:
        logger.warning("Verification failed on %s: %s", g.describe(), ", ".join(failed))
        return 1
    return 0


def cmd_export(args: argparse.Namespace) -> int:
    g = _graph(args)
    ops = build_walk_operators(g)
    matrices = {
        Operator.RW: ops.p_matrix,
        Operator.GROVER: ops.u_matrix,
        Operator.GROVER_SUPPORT: ops.u_support,
        Operator.LAPLACIAN: ops.laplacian,
        Operator.ADJACENCY: ops.a_matrix,
        Operator.DEGREE: ops.d_matrix,
        Operator.EDGE: ops.edge,
    }
    operator = Operator(args.operator)
    _write_output(args.out, render_matrix(matrices[operator], args.format, name=f"{operator.value} of {g.describe()}"))
    return 0


# ==========================================
# Parser
# ==========================================

def _add_common_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--graph', required=True,
                        help='Graph source: complete:n, cycle:n, star:n, path:n, bipartite:a,b, '
                             'random:n,extra[,seed], named:<preset>, or an edge-list / JSON file')
    parser.add_argument('--format', choices=FORMATS, default='text', help='Output format (default: text)')
    parser.add_argument('--out', help='Output file (default: stdout)')
    parser.add_argument('--tol', type=_positive_float, default=Config.GROUPING_TOL,
                        help=f'Eigenvalue grouping tolerance (default: {Config.GROUPING_TOL:g})')
    parser.add_argument('--seed', type=int, default=Config.DEFAULT_SEED,
                        help=f'Seed for random graphs and sampling (default: {Config.DEFAULT_SEED})')
    parser.add_argument('--log-level', default=None,
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'],
                        help=f'Logging level on stderr (default: {Config.LOG_LEVEL})')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='qwzeta',
        description='Grover walks, graph zeta functions and the quantum-walk Lambda function.',
    )
    parser.add_argument('--version', action='version', version=f'%(prog)s {VERSION}')
    subparsers = parser.add_subparsers(dest='command', required=True)

    p_gen = subparsers.add_parser('gen', help='Generate or load a graph and print it')
    _add_common_args(p_gen)
    p_gen.set_defaults(func=cmd_gen)

    p_spec = subparsers.add_parser('spectrum', help='Eigenvalues with multiplicities')
    _add_common_args(p_spec)
    p_spec.add_argument('--operator', choices=SPECTRUM_OPERATORS, default=Operator.RW.value)
    p_spec.add_argument('--method', choices=['direct', 'mapping'], default='direct',
                        help='For the Grover matrix: direct eigensolve or reconstruction from Spec(P)')
    p_spec.add_argument('--angles', action='store_true', help='Print the angles theta = arccos(lambda) of Spec(P)')
    p_spec.set_defaults(func=cmd_spectrum)

    p_zeros = subparsers.add_parser('zeros', help='Zeros of the quantum-walk Lambda function')
    _add_common_args(p_zeros)
    p_zeros.add_argument('--m-spectrum', action='store_true', help='Print Spec(M) instead of the zeros')
    p_zeros.set_defaults(func=cmd_zeros)

    p_zeta = subparsers.add_parser('zeta', help='Point evaluation of the zeta functions')
    _add_common_args(p_zeta)
    p_zeta.add_argument('--u', type=_complex_point, help="Point 're,im' for the Ihara and Grover zetas")
    p_zeta.add_argument('--s', type=_complex_point, help="Point 're,im' for the Lambda function")
    p_zeta.add_argument('--cycles', type=_positive_int, metavar='R', help='Print N_1..N_R')
    p_zeta.set_defaults(func=cmd_zeta)

    p_verify = subparsers.add_parser('verify', help='Check an identity numerically')
    _add_common_args(p_verify)
    p_verify.add_argument('--identity', choices=[i.value for i in Identity], default=Identity.ALL.value)
    p_verify.add_argument('--samples', type=_positive_int, default=Config.DEFAULT_SAMPLES,
                          help=f'Sample points per identity (default: {Config.DEFAULT_SAMPLES})')
    p_verify.add_argument('--radius', type=_positive_float, default=Config.DEFAULT_RADIUS,
                          help=f'Sampling disk radius for u (default: {Config.DEFAULT_RADIUS})')
    p_verify.set_defaults(func=cmd_verify)

    p_export = subparsers.add_parser('export', help='Dump an operator matrix')
    _add_common_args(p_export)
    p_export.add_argument('--operator', choices=[o.value for o in Operator], default=Operator.GROVER.value)
    p_export.set_defaults(func=cmd_export)

    return parser


def _configure_logging(level: Optional[str]) -> None:
    logging.basicConfig(
        stream=sys.stderr,
        level=getattr(logging, level or Config.LOG_LEVEL, logging.WARNING),
        format='%(levelname)s %(name)s: %(message)s',
    )


def run(argv: Optional[List[str]] = None) -> int:
    """Parse argv, run one command, return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    _configure_logging(args.log_level)
    try:
        return args.func(args)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (QWZetaError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main() -> None:
    """Entry point for the `qwzeta` command."""
    sys.exit(run())


if __name__ == '__main__':
    main()
