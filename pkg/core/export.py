"""
Rendu JSON / CSV / texte des graphes, matrices, spectres, zéros et rapports.
Le format texte est déterministe : entrées triées, 12 chiffres significatifs.
"""

import csv
import io
import json
import math
from typing import Any, Dict, List, Sequence

import numpy as np

from config import Config
from .graph import format_edge_list, graph_to_json
from .models import (
    INFINITY,
    AngleSpectrum,
    Graph,
    MSpectrum,
    Spectrum,
    VerificationReport,
    ZeroEntry,
    ZeroSet,
)

INFINITY_TEXT = "1/2 + i*inf"

FORMATS = ('json', 'csv', 'text')


def _real(x: float) -> float:
    x = float(x)
    return 0.0 if x == 0.0 else x


def jsonable(value: Any) -> Any:
    """Valeurs JSON strictes : complexes en {re, im}, inf/nan en chaînes."""
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        if math.isnan(value):
            return "nan"
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return _real(value)
    if isinstance(value, (complex, np.complexfloating)):
        return {"re": jsonable(value.real), "im": jsonable(value.imag)}
    if value is INFINITY:
        return "inf"
    return value


def fmt_real(x: float, digits: int = Config.TEXT_DIGITS) -> str:
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return f"{_real(x):.{digits}g}"


def fmt_complex(z: complex, digits: int = Config.TEXT_DIGITS) -> str:
    z = complex(z)
    re, im = _real(z.real), _real(z.imag)
    if im == 0.0:
        return fmt_real(re, digits)
    sign = '-' if im < 0 else '+'
    return f"{fmt_real(re, digits)} {sign} {fmt_real(abs(im), digits)}i"


def fmt_zero(zero: ZeroEntry, digits: int = Config.TEXT_DIGITS) -> str:
    if zero.gamma is INFINITY:
        return INFINITY_TEXT
    gamma = _real(zero.gamma)
    if gamma == 0.0:
        return "1/2"
    sign = '-' if gamma < 0 else '+'
    return f"1/2 {sign} i*{fmt_real(abs(gamma), digits)}"


def _csv(header: Sequence[str], rows: List[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


# ==========================================
# Dictionnaires (JSON et API)
# ==========================================

def graph_to_dict(g: Graph) -> Dict[str, Any]:
    data = graph_to_json(g)
    data.update({"name": g.name, "case": g.case_tag.value, "degrees": list(g.degrees)})
    return data


def matrix_to_dict(matrix) -> Dict[str, Any]:
    rows = np.asarray(matrix)
    return {"shape": list(rows.shape), "rows": [[jsonable(x) for x in row] for row in rows]}


def spectrum_to_dict(spectrum: Spectrum) -> Dict[str, Any]:
    return {
        "entries": [
            {"re": _real(e.value.real), "im": _real(e.value.imag), "mult": e.multiplicity}
            for e in spectrum
        ],
        "tol": spectrum.grouping_tol,
    }


def angle_spectrum_to_dict(angles: AngleSpectrum) -> Dict[str, Any]:
    return {"entries": [{"theta": _real(a.theta), "mult": a.multiplicity} for a in angles.entries]}


def m_spectrum_to_dict(spectrum: MSpectrum) -> Dict[str, Any]:
    return {
        "finite": [{"value": _real(e.value), "mult": e.multiplicity} for e in spectrum.finite],
        "infinite": spectrum.infinite_multiplicity,
    }


def _zeros(entries) -> List[Dict[str, Any]]:
    return [
        {"gamma": "inf" if z.gamma is INFINITY else _real(z.gamma), "mult": z.multiplicity}
        for z in entries
    ]


def zero_set_to_dict(zeros: ZeroSet) -> Dict[str, Any]:
    return {
        "case": zeros.case_tag.value,
        "zeros": _zeros(zeros.zeros),
        "rw": _zeros(zeros.rw_zeros),
        "rwc": _zeros(zeros.rwc_zeros),
        "total": zeros.total,
    }


def report_to_dict(report: VerificationReport) -> Dict[str, Any]:
    return {
        "identity": report.identity_name,
        "graph": report.graph_name,
        "passed": report.passed,
        "max_rel_residual": jsonable(report.max_rel_residual),
        "tolerance": report.tolerance,
        "samples": [
            {
                "point": jsonable(s.point),
                "lhs": jsonable(s.lhs),
                "rhs": jsonable(s.rhs),
                "abs_residual": jsonable(s.abs_residual),
                "rel_residual": jsonable(s.rel_residual),
            }
            for s in report.samples
        ],
    }


def to_json(payload: Any) -> str:
    return json.dumps(payload, indent=2, allow_nan=False) + "\n"


# ==========================================
# Rendus par type
# ==========================================

def render_graph(g: Graph, fmt: str) -> str:
    if fmt == 'json':
        return to_json(graph_to_json(g))
    if fmt == 'csv':
        return _csv(("u", "v"), list(g.edges))
    return format_edge_list(g)


def render_matrix(matrix, fmt: str, name: str = "") -> str:
    rows = np.asarray(matrix)
    if fmt == 'json':
        payload = matrix_to_dict(rows)
        payload["name"] = name
        return to_json(payload)
    if fmt == 'csv':
        return _csv([f"c{j}" for j in range(rows.shape[1])], [[fmt_real(x) for x in row] for row in rows])
    lines = [f"# {name} ({rows.shape[0]}x{rows.shape[1]})"] if name else []
    lines += [" ".join(fmt_real(x) for x in row) for row in rows]
    return "\n".join(lines) + "\n"


def render_spectrum(spectrum: Spectrum, fmt: str, name: str = "") -> str:
    if fmt == 'json':
        return to_json(spectrum_to_dict(spectrum))
    if fmt == 'csv':
        return _csv(("re", "im", "mult"),
                    [(fmt_real(e.value.real), fmt_real(e.value.imag), e.multiplicity) for e in spectrum])
    lines = [f"# {name}: {len(spectrum)} distinct, total {spectrum.total}"] if name else []
    lines += [f"[{fmt_complex(e.value)}]^{e.multiplicity}" for e in spectrum]
    return "\n".join(lines) + "\n"


def render_angles(angles: AngleSpectrum, fmt: str) -> str:
    if fmt == 'json':
        return to_json(angle_spectrum_to_dict(angles))
    if fmt == 'csv':
        return _csv(("theta", "mult"), [(fmt_real(a.theta), a.multiplicity) for a in angles.entries])
    return "\n".join(f"theta={fmt_real(a.theta)} [x{a.multiplicity}]" for a in angles.entries) + "\n"


def render_m_spectrum(spectrum: MSpectrum, fmt: str) -> str:
    if fmt == 'json':
        return to_json(m_spectrum_to_dict(spectrum))
    rows = [("inf", spectrum.infinite_multiplicity)] if spectrum.infinite_multiplicity else []
    rows += [(fmt_real(e.value), e.multiplicity) for e in spectrum.finite]
    if fmt == 'csv':
        return _csv(("value", "mult"), rows)
    return "\n".join(f"[{value}]^{mult}" for value, mult in rows) + "\n"


def render_zero_set(zeros: ZeroSet, fmt: str) -> str:
    if fmt == 'json':
        return to_json(zero_set_to_dict(zeros))
    if fmt == 'csv':
        # zéros finis seulement, pour tracé externe
        return _csv(("re", "gamma", "mult"),
                    [(0.5, fmt_real(z.gamma), z.multiplicity) for z in zeros.finite()])
    lines = [f"# case {zeros.case_tag.value}, total multiplicity {zeros.total}"]
    lines += [f"[{fmt_zero(z)}]^{z.multiplicity}" for z in zeros.zeros]
    return "\n".join(lines) + "\n"


def render_reports(reports: Sequence[VerificationReport], fmt: str) -> str:
    if fmt == 'json':
        return to_json({
            "passed": all(r.passed for r in reports),
            "reports": [report_to_dict(r) for r in reports],
        })
    rows = [
        (r.identity_name, r.graph_name, "PASS" if r.passed else "FAIL",
         fmt_real(r.max_rel_residual), f"{r.tolerance:g}", len(r.samples))
        for r in reports
    ]
    if fmt == 'csv':
        return _csv(("identity", "graph", "status", "max_rel_residual", "tolerance", "samples"), rows)
    return "\n".join(
        f"{status} {identity} on {graph or 'graph'}: max residual {residual} "
        f"(tol {tol}, {count} samples)"
        for identity, graph, status, residual, tol, count in rows
    ) + "\n"
