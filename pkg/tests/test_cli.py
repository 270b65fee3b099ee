import json
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest

from fibspec.cli import (
    DocumentError,
    emit_json,
    parse_model_document,
    parse_report,
    report_to_dict,
)
from fibspec.cli.main import main
from fibspec.spectra import evaluate

from fixtures import case3_model, smooth_weierstrass_p2
from fibspec.geometry import named_base


def _case3_document(b2_count=15):
    return {
        "version": 1,
        "base": {"name": "P2"},
        "components": [
            {"class": [1], "ord_a": 0, "ord_b": 0, "ord_d": 3, "monodromy": "non-split"}
        ],
        "collisions": [
            {"kind": "Q1", "count": 6},
            {"kind": "Q2", "count": b2_count},
        ],
        "singular_points": [
            {
                "count": b2_count,
                "variables": ["z", "x", "y", "w"],
                "equation": "z^2+x^2+y^2+w^2",
            }
        ],
        "euler_characteristic": {
            "source": "strata",
            "strata": [
                {"chi": -19, "fiber_euler": 3},
                {"chi": -807, "fiber_euler": 1},
            ],
            "points": [{"count": 180, "fiber_euler": 2}],
        },
        "budget": {"r1": 3, "r2": 1},
    }


def _smooth_document():
    return {
        "version": 1,
        "base": {"name": "P2"},
        "euler_characteristic": {"source": "betti", "b2": 2, "b3": 546},
    }


def _run(argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    return info.value.code


def test_document_parses_to_passing_model():
    model = parse_model_document(_case3_document())
    report = evaluate(model)
    assert report.passed and report.theorem.lhs == 57


def test_unknown_keys_rejected():
    doc = _smooth_document()
    doc["extra"] = 1
    with pytest.raises(DocumentError):
        parse_model_document(doc)
    doc = _smooth_document()
    doc["base"]["bogus"] = True
    with pytest.raises(DocumentError):
        parse_model_document(doc)


def test_version_required():
    doc = _smooth_document()
    doc["version"] = 2
    with pytest.raises(DocumentError):
        parse_model_document(doc)
    del doc["version"]
    with pytest.raises(DocumentError):
        parse_model_document(doc)


def test_report_json_round_trip():
    report = evaluate(smooth_weierstrass_p2("betti"))
    blob = emit_json(report, timestamp=False)
    parsed = parse_report(blob)
    assert parsed == report_to_dict(report, timestamp=False)
    # fractions survive
    report = evaluate(case3_model(named_base("P2"), (1,), 1))
    parsed = parse_report(emit_json(report, timestamp=False))
    q1 = [r for r in parsed["representations"] if r["source"] == "Q1"][0]
    assert q1["multiplicity"] == 3  # 6 points at one half each


def test_analyze_determinism(tmp_path, capsys):
    path = tmp_path / "model.json"
    path.write_text(json.dumps(_case3_document()))
    code = _run(["analyze", str(path), "--json", "--no-timestamp"])
    first = capsys.readouterr().out
    assert code == 0
    code = _run(["analyze", str(path), "--json", "--no-timestamp"])
    second = capsys.readouterr().out
    assert first == second


def test_analyze_exit_codes(tmp_path, capsys):
    good = tmp_path / "good.json"
    good.write_text(json.dumps(_case3_document()))
    assert _run(["analyze", str(good), "--no-timestamp"]) == 0
    capsys.readouterr()

    # perturbed collision count: identity fails, exit 3, report still emitted
    bad = _case3_document(b2_count=16)
    bad["singular_points"][0]["count"] = 15
    bad["euler_characteristic"] = {"source": "direct", "value": -441}
    bad.pop("budget")
    path = tmp_path / "perturbed.json"
    path.write_text(json.dumps(bad))
    assert _run(["analyze", str(path), "--no-timestamp"]) == 3
    out = capsys.readouterr().out
    assert "FAIL" in out

    malformed = tmp_path / "broken.json"
    malformed.write_text("{not json")
    assert _run(["analyze", str(malformed)]) == 2
    capsys.readouterr()

    missing = tmp_path / "missing.json"
    assert _run(["analyze", str(missing)]) == 1
    capsys.readouterr()


def test_analyze_batch(tmp_path, capsys):
    (tmp_path / "a.json").write_text(json.dumps(_smooth_document()))
    (tmp_path / "b.json").write_text(json.dumps(_case3_document()))
    assert _run(["analyze", "--batch", str(tmp_path), "--no-timestamp"]) == 0
    out = capsys.readouterr().out
    assert out.count("overall: PASS") == 2


def test_variant_rprime_flag(tmp_path, capsys):
    path = tmp_path / "model.json"
    path.write_text(json.dumps(_smooth_document()))
    assert _run(["analyze", str(path), "--variant-rprime", "--no-timestamp"]) == 0
    out = capsys.readouterr().out
    assert "identity [Rprime]" in out and "overall: PASS" in out


def test_milnor_command(capsys):
    assert _run(["milnor", "--vars", "z,x,y,w", "z^3+x^2+y^2+w^2"]) == 0
    out = capsys.readouterr().out
    assert "mu = 2" in out and "tau = 2" in out and "yes" in out

    assert _run(["milnor", "--vars", "x,y", "x^2*y"]) == 4
    out = capsys.readouterr().out
    assert "infinite" in out

    assert _run(["milnor", "--vars", "x,y", "x^5+y^5+x^3*y^3"]) == 0
    out = capsys.readouterr().out
    assert "mu = 16" in out and "tau = 15" in out and "no" in out


def test_table_command(capsys):
    assert _run(["table", "I5:sp2"]) == 0
    out = capsys.readouterr().out
    assert "(8, 12, 2, 4)" in out and "match: yes" in out

    assert _run(["table", "II*:e8"]) == 0
    out = capsys.readouterr().out
    assert "NM" in out

    assert _run(["table", "I0*:g2"]) == 0
    out = capsys.readouterr().out
    assert "(12, 6, 0, '-')" in out

    assert _run(["table", "nonsense"]) == 2


def test_console_script_entry_point(tmp_path):
    path = tmp_path / "model.json"
    path.write_text(json.dumps(_smooth_document()))
    proc = subprocess.run(
        [sys.executable, "-m", "fibspec.cli.main", "analyze", str(path), "--no-timestamp"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "overall: PASS" in proc.stdout
