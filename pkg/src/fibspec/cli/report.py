"""Report emission: lossless JSON plus a human-readable table rendering.

All numbers are exact: integers stay integers, proper fractions are encoded
as "p/q" strings and restored on parse.
"""

from __future__ import annotations

import datetime
import json
import re
from fractions import Fraction
from typing import Any, Dict

from ..spectra.engine import SpectrumReport

_FRACTION_RE = re.compile(r"^-?\d+/\d+$")


def _encode(value):
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return int(value)
        return f"{value.numerator}/{value.denominator}"
    return value


def _decode(value):
    if isinstance(value, str) and _FRACTION_RE.match(value):
        return Fraction(value)
    return value


def report_to_dict(report: SpectrumReport, timestamp: bool = True) -> Dict[str, Any]:
    model = report.model
    doc: Dict[str, Any] = {
        "version": 1,
        "base": {
            "name": model.base.name,
            "k_squared": model.base.k_squared(),
            "h11": model.base.h11,
        },
        "algebra": {
            "label": report.algebra.label(),
            "summands": [
                {"name": a.physics, "series": a.series, "rank": a.rank, "dim": a.dim}
                for a in report.algebra.summands
            ],
            "u1_rank": report.algebra.u1_rank,
            "total_rank": report.algebra.rank,
            "vector_dim": report.algebra.dim,
        },
        "components": [
            {
                "index": c.index,
                "type": c.assignment.kodaira_type,
                "algebra": c.algebra.physics if c.algebra else "-",
                "lambda": c.assignment.lam,
                "genus": c.genus,
                "cover_genus": c.cover_genus,
                "fiber_euler": c.assignment.fiber_euler,
                "table_row": c.assignment.row.number,
            }
            for c in report.components
        ],
        "representations": [
            {
                "source": line.source,
                "component": line.component,
                "rep": line.label,
                "multiplicity": _encode(line.multiplicity),
                "charged_each": _encode(line.charged_each),
                "charged_total": _encode(line.charged_total),
            }
            for line in report.reps
        ],
        "milnor_sum": report.mu_sum,
        "tyurina_sum": report.tau_sum,
        "chi_top": report.chi_top,
        "deformations": {
            "cx_def": report.deformations.cx_def,
            "ka_def": report.deformations.ka_def,
            "b2": report.deformations.b2,
            "b3": report.deformations.b3,
            "h11_x": report.deformations.h11_x,
            "cx_def_localized": report.deformations.cx_def_localized,
            "cx_def_nonlocalized": report.deformations.cx_def_nonlocalized,
        },
        "identity": {
            "mode": report.theorem.mode,
            "lhs": report.theorem.lhs,
            "rhs": report.theorem.rhs,
            "lhs_prime": report.theorem.lhs_prime,
            "rhs_prime": report.theorem.rhs_prime,
            "difference": report.theorem.difference,
            "passed": report.theorem.passed,
        },
        "anomaly": {
            "H": _encode(report.anomaly.hyper),
            "V": report.anomaly.vector,
            "T": report.anomaly.tensor,
            "H_charged_unlocalized": _encode(report.anomaly.h_charged_unlocalized),
            "H_charged_localized": _encode(report.anomaly.h_charged_localized),
            "H_uncharged": report.anomaly.h_uncharged,
            "H_uncharged_localized": report.anomaly.h_uncharged_localized,
            "residue": _encode(report.anomaly.residue),
            "passed": report.anomaly.passed,
        },
        "budget_passed": report.budget_passed,
        "notes": list(report.notes),
        "passed": report.passed,
    }
    if timestamp:
        doc["generated_at"] = datetime.datetime.now(datetime.timezone.utc).isoformat()
    return doc


def emit_json(report: SpectrumReport, timestamp: bool = True) -> str:
    return json.dumps(report_to_dict(report, timestamp), indent=2, sort_keys=True)


def parse_report(text: str) -> Dict[str, Any]:
    """Inverse of emit_json up to the timestamp: 'p/q' strings become
    Fractions again so the round trip is lossless."""

    def walk(value):
        if isinstance(value, dict):
            return {k: walk(v) for k, v in value.items()}
        if isinstance(value, list):
            return [walk(v) for v in value]
        return _decode(value)

    return walk(json.loads(text))


def _fmt(value) -> str:
    encoded = _encode(value)
    return str(encoded)


def emit_text(report: SpectrumReport, timestamp: bool = True) -> str:
    lines = []
    model = report.model
    lines.append("fibspec spectrum report")
    if timestamp:
        lines.append(
            "generated: " + datetime.datetime.now(datetime.timezone.utc).isoformat()
        )
    lines.append(
        f"base: {model.base.name}  K^2 = {model.base.k_squared()}  h11 = {model.base.h11}"
    )
    lines.append(
        f"gauge algebra: {report.algebra.label()}  "
        f"(V = {report.algebra.dim}, rank = {report.algebra.rank})"
    )
    for c in report.components:
        alg = c.algebra.physics if c.algebra else "-"
        lines.append(
            f"component {c.index}: type {c.assignment.kodaira_type}  algebra {alg}  "
            f"lambda = {c.assignment.lam}  g = {c.genus}  g' = {c.cover_genus}"
        )
    if report.reps:
        lines.append("")
        lines.append(f"{'source':<6} {'rep':<24} {'mult':>8} {'(dim)_ch':>9} {'total':>8}")
        for line in report.reps:
            lines.append(
                f"{line.source:<6} {line.label:<24} {_fmt(line.multiplicity):>8}"
                f" {_fmt(line.charged_each):>9} {_fmt(line.charged_total):>8}"
            )
    lines.append("")
    lines.append(
        f"chi_top = {report.chi_top}   sum mu = {report.mu_sum}   sum tau = {report.tau_sum}"
    )
    d = report.deformations
    lines.append(
        f"deformations: CxDef = {d.cx_def} (localized {d.cx_def_localized} + "
        f"non-localized {d.cx_def_nonlocalized})  KaDef = {d.ka_def}  "
        f"b2 = {d.b2}  b3 = {d.b3}  h11(X) = {d.h11_x}"
    )
    t = report.theorem
    verdict = "pass" if t.passed else "FAIL"
    if t.mode == "R":
        lines.append(
            f"identity [{t.mode}]: lhs = {t.lhs}  rhs = {t.rhs}  "
            f"difference = {t.difference}  [{verdict}]"
        )
    else:
        lines.append(
            f"identity [{t.mode}]: lhs' = {t.lhs_prime}  rhs' = {t.rhs_prime}  "
            f"difference = {t.difference}  [{verdict}]"
        )
    a = report.anomaly
    averdict = "pass" if a.passed else "FAIL"
    lines.append(
        f"anomaly: H = {_fmt(a.hyper)}  V = {a.vector}  T = {a.tensor}  "
        f"H - V + 29T - 273 = {_fmt(a.residue)}  [{averdict}]"
    )
    if report.budget_passed is not None:
        lines.append(
            "collision budget: " + ("pass" if report.budget_passed else "FAIL")
        )
    for note in report.notes:
        lines.append(f"note: {note}")
    lines.append("overall: " + ("PASS" if report.passed else "FAIL"))
    return "\n".join(lines) + "\n"
