"""Command-line interface contract tests.

Everything runs through real subprocesses: exit codes (0 all-passed /
1 some-failed / 2 usage or domain error), the JSON report document schema
and its fixed key order, determinism of report bodies, CSV shape and
precision of the eval families, and the catalog listing.
"""

import json
import math
import os
import subprocess
import sys

import jsonschema
import numpy as np
import pytest

COMPLEX_SCHEMA = {
    "type": "object",
    "required": ["re", "im"],
    "properties": {"re": {"type": "number"}, "im": {"type": "number"}},
    "additionalProperties": False,
}

REPORT_SCHEMA = {
    "type": "object",
    "required": ["identity", "params", "lhs", "rhs", "abs_err", "rel_err",
                 "tol", "passed", "runtime_ms"],
    "properties": {
        "identity": {"type": "string"},
        "params": {"type": "object"},
        "lhs": COMPLEX_SCHEMA,
        "rhs": COMPLEX_SCHEMA,
        "abs_err": {"type": "number", "minimum": 0},
        "rel_err": {"type": "number", "minimum": 0},
        "tol": {"type": "number", "exclusiveMinimum": 0},
        "passed": {"type": "boolean"},
        "runtime_ms": {"type": "number", "minimum": 0},
    },
    "additionalProperties": False,
}

DOCUMENT_SCHEMA = {
    "type": "object",
    "required": ["tool", "version", "timestamp", "reports",
                 "resolved_constants"],
    "properties": {
        "tool": {"const": "ngwp"},
        "version": {"type": "string"},
        "timestamp": {"type": "string"},
        "reports": {"type": "array", "minItems": 1, "items": REPORT_SCHEMA},
        "resolved_constants": {
            "type": "object",
            "additionalProperties": {"type": "string"},
        },
    },
    "additionalProperties": False,
}

REPORT_KEY_ORDER = ["identity", "params", "lhs", "rhs", "abs_err", "rel_err",
                    "tol", "passed", "runtime_ms"]


def run_cli(*args, backend="numpy"):
    env = dict(os.environ)
    if backend is not None:
        env["NGWP_BACKEND"] = backend
    else:
        env.pop("NGWP_BACKEND", None)
    return subprocess.run([sys.executable, "-m", "ngwp.cli", *args],
                          capture_output=True, text=True, timeout=600,
                          env=env)


def parse_csv(stdout):
    lines = stdout.strip().split("\n")
    return lines[0], [line.split(",") for line in lines[1:]]


# ------------------------------------------------------------------- verify

def test_verify_single_id_passes():
    res = run_cli("verify", "--id", "eq2.3")
    assert res.returncode == 0, res.stderr
    assert "9/9 passed" in res.stdout
    assert "[PASS]" in res.stdout and "[FAIL]" not in res.stdout


def test_verify_unknown_id_is_usage_error():
    res = run_cli("verify", "--id", "eq99.1")
    assert res.returncode == 2
    assert "eq99.1" in res.stderr
    assert "thm2.1" in res.stderr  # the known ids are listed


def test_verify_requires_a_selection():
    res = run_cli("verify")
    assert res.returncode == 2


def test_verify_rejects_nonpositive_tol():
    res = run_cli("verify", "--id", "eq2.2", "--tol", "-1e-8")
    assert res.returncode == 2


def test_verify_failure_exits_1():
    # the forward quadrature of this pair saturates around 3.6e-9, so a
    # 1e-10 demand must come back as a clean failed check, not an error
    res = run_cli("verify", "--id", "eq2.12", "--tol", "1e-10")
    assert res.returncode == 1
    assert "[FAIL]" in res.stdout
    assert "0/1 passed" in res.stdout


def test_verify_json_document_schema_and_key_order():
    res = run_cli("verify", "--id", "eq4.4", "--json")
    assert res.returncode == 0, res.stderr
    doc = json.loads(res.stdout)
    jsonschema.validate(doc, DOCUMENT_SCHEMA)
    assert len(doc["reports"]) == 3
    for rep in doc["reports"]:
        assert list(rep.keys()) == REPORT_KEY_ORDER
        assert rep["identity"] == "eq4.4"
        assert rep["passed"] is True


def test_verify_aggregates_resolved_constants():
    res = run_cli("verify", "--id", "thm3.1", "--id", "thm4.1", "--json")
    assert res.returncode == 0, res.stderr
    doc = json.loads(res.stdout)
    assert set(doc["resolved_constants"]) == {"thm3.1", "thm4.1"}
    for note in doc["resolved_constants"].values():
        assert isinstance(note, str) and note


def test_verify_out_file_matches_stdout(tmp_path):
    out = tmp_path / "report.json"
    res = run_cli("verify", "--id", "eq4.3", "--json", "--out", str(out))
    assert res.returncode == 0, res.stderr
    assert out.read_text() == res.stdout
    jsonschema.validate(json.loads(out.read_text()), DOCUMENT_SCHEMA)


def _normalized(doc_text):
    doc = json.loads(doc_text)
    doc["timestamp"] = "T"
    for rep in doc["reports"]:
        rep["runtime_ms"] = 0.0
    return json.dumps(doc, indent=2)


def test_verify_reports_are_deterministic():
    first = run_cli("verify", "--id", "eq4.4", "--id", "eq2.2", "--json")
    second = run_cli("verify", "--id", "eq4.4", "--id", "eq2.2", "--json")
    assert first.returncode == 0 and second.returncode == 0
    assert _normalized(first.stdout) == _normalized(second.stdout)


def test_verify_default_backend_agrees_with_numpy():
    # compiled and pure-numpy kernels may differ in the last ulp, so the
    # comparison is numeric, not textual
    forced = run_cli("verify", "--id", "eq2.3", "--json")
    auto = run_cli("verify", "--id", "eq2.3", "--json", backend=None)
    assert forced.returncode == 0 and auto.returncode == 0
    freports = json.loads(forced.stdout)["reports"]
    areports = json.loads(auto.stdout)["reports"]
    assert len(freports) == len(areports) == 9
    for f, a in zip(freports, areports):
        assert f["params"] == a["params"] and a["passed"]
        for side in ("lhs", "rhs"):
            fv = complex(f[side]["re"], f[side]["im"])
            av = complex(a[side]["re"], a[side]["im"])
            assert abs(fv - av) <= 1e-12 * (1.0 + abs(fv))


# --------------------------------------------------------------------- eval

def test_eval_glaisher_grid_csv_shape():
    res = run_cli("eval", "--family", "glaisher", "--x", "0:4:81",
                  "--b", "1", "--tau", "0.1")
    assert res.returncode == 0, res.stderr
    header, rows = parse_csv(res.stdout)
    assert header == "a,re,im,abs"
    assert len(rows) == 81
    for row in rows:
        assert len(row) == 4
        vals = [float(f) for f in row]
        assert all(math.isfinite(val) for val in vals)
        assert vals[3] == pytest.approx(math.hypot(vals[1], vals[2]),
                                        rel=1e-15, abs=1e-300)
    positions = [float(row[0]) for row in rows]
    np.testing.assert_allclose(positions, np.linspace(0.0, 4.0, 81),
                               atol=1e-16)


def test_eval_grid_minimum_two_points():
    res = run_cli("eval", "--family", "glaisher", "--x", "1:2:2",
                  "--tau", "0.1")
    assert res.returncode == 0, res.stderr
    _, rows = parse_csv(res.stdout)
    assert len(rows) == 2


def test_eval_series_matches_quadrature():
    base = ("eval", "--family", "glasser-v", "--v", "0.5", "--x", "1.5",
            "--tau", "0.1")
    series = run_cli(*base)
    integral = run_cli(*base, "--via-integral")
    assert series.returncode == 0 and integral.returncode == 0
    _, srows = parse_csv(series.stdout)
    _, irows = parse_csv(integral.stdout)
    s = complex(float(srows[0][1]), float(srows[0][2]))
    i = complex(float(irows[0][1]), float(irows[0][2]))
    assert abs(s - i) <= 1e-6 * (1.0 + abs(s))


def test_eval_negative_position_uses_even_symmetry():
    pos = run_cli("eval", "--family", "glaisher", "--x", "1.2",
                  "--b", "1", "--tau", "0.1")
    neg = run_cli("eval", "--family", "glaisher", "--x=-1.2",
                  "--b", "1", "--tau", "0.1")
    assert pos.returncode == 0 and neg.returncode == 0
    _, prow = parse_csv(pos.stdout)
    _, nrow = parse_csv(neg.stdout)
    assert prow[0][0] == "1.2" and nrow[0][0] == "-1.2"
    assert prow[0][1:] == nrow[0][1:]  # identical value fields


def test_eval_zero_position_falls_back_to_quadrature():
    res = run_cli("eval", "--family", "glasser-v", "--v", "0.5", "--x", "0",
                  "--tau", "0.2")
    assert res.returncode == 0, res.stderr
    _, rows = parse_csv(res.stdout)
    vals = [float(f) for f in rows[0]]
    assert vals[0] == 0.0
    assert all(math.isfinite(val) for val in vals)
    assert vals[3] > 0.0


def test_eval_two_particle_five_columns():
    res = run_cli("eval", "--family", "two-particle", "--x", "0.2:1:5",
                  "--w2", "0.7", "--m2", "2", "--hbar-t", "1")
    assert res.returncode == 0, res.stderr
    header, rows = parse_csv(res.stdout)
    assert header == "w1,w2,re,im,abs"
    assert len(rows) == 5
    for row in rows:
        assert len(row) == 5
        assert float(row[1]) == 0.7
        assert math.isfinite(float(row[4]))


def test_eval_physical_time_trio_equals_tau():
    # hbar t / (2 m) = 2*8/(2*4) = 2
    trio = run_cli("eval", "--family", "glaisher", "--a", "1",
                   "--hbar", "2", "--mass", "4", "--time", "8")
    direct = run_cli("eval", "--family", "glaisher", "--a", "1",
                     "--tau", "2")
    assert trio.returncode == 0 and direct.returncode == 0
    assert trio.stdout == direct.stdout


def test_eval_two_particle_hbar_time_product():
    product = run_cli("eval", "--family", "two-particle", "--w1", "0.4",
                      "--w2", "0.7", "--hbar", "0.5", "--time", "2")
    direct = run_cli("eval", "--family", "two-particle", "--w1", "0.4",
                     "--w2", "0.7", "--hbar-t", "1")
    assert product.returncode == 0 and direct.returncode == 0
    assert product.stdout == direct.stdout


def test_eval_csv_fields_carry_full_precision():
    res = run_cli("eval", "--family", "glaisher", "--x", "0.5:1.5:3",
                  "--b", "1", "--tau", "0.1")
    assert res.returncode == 0, res.stderr
    _, rows = parse_csv(res.stdout)
    for row in rows:
        for field in row:
            assert "%.17g" % float(field) == field


def test_eval_out_file(tmp_path):
    out = tmp_path / "packet.csv"
    res = run_cli("eval", "--family", "glaisher", "--x", "1:2:3",
                  "--tau", "0.1", "--out", str(out))
    assert res.returncode == 0, res.stderr
    assert res.stdout == ""
    header, rows = parse_csv(out.read_text())
    assert header == "a,re,im,abs" and len(rows) == 3


@pytest.mark.parametrize("args", [
    ("eval", "--family", "glasser-v", "--v", "1", "--x", "1", "--tau", "0.1"),
    ("eval", "--family", "glaisher", "--x", "1:2", "--tau", "0.1"),
    ("eval", "--family", "glaisher", "--x", "2:1:5", "--tau", "0.1"),
    ("eval", "--family", "glaisher", "--x", "1:9:1", "--tau", "0.1"),
    ("eval", "--family", "glaisher", "--x", "abc", "--tau", "0.1"),
    ("eval", "--family", "glaisher", "--x", "1"),
    ("eval", "--family", "glaisher", "--x", "1:2:3", "--a", "1",
     "--tau", "0.1"),
    ("eval", "--family", "glasser-v", "--x", "1", "--tau", "0.1"),
    ("eval", "--family", "two-particle", "--x", "1"),
    ("eval", "--family", "unknown", "--x", "1", "--tau", "0.1"),
    ("eval", "--family", "glaisher", "--x", "1", "--hbar", "1",
     "--mass", "1"),
], ids=["odd-v", "grid-2-part", "grid-reversed", "grid-1-point",
        "grid-garbage", "no-tau", "grid-and-single", "missing-v",
        "missing-hbar-t", "bad-family", "incomplete-trio"])
def test_eval_usage_and_domain_errors_exit_2(args):
    res = run_cli(*args)
    assert res.returncode == 2, res.stdout + res.stderr


# --------------------------------------------------------------------- list

def test_list_table():
    res = run_cli("list")
    assert res.returncode == 0
    for ident in ("eq2.2", "thm2.1", "thm3.1", "thm4.1", "eq3.4"):
        assert ident in res.stdout


def test_list_json_is_ordered_and_stable():
    first = run_cli("list", "--json")
    second = run_cli("list", "--json")
    assert first.returncode == 0 and second.returncode == 0
    assert first.stdout == second.stdout
    entries = json.loads(first.stdout)
    assert [e["id"] for e in entries] == [
        "eq2.2", "eq2.3", "thm2.1", "eq3.3", "thm3.1", "sec3.final",
        "eq4.3", "eq4.4", "thm4.1", "eq2.12", "eq2.13", "eq3.4"]
    assert all(set(e) == {"id", "description"} and e["description"]
               for e in entries)


def test_version_flag():
    res = run_cli("--version")
    assert res.returncode == 0
    assert "ngwp" in res.stdout
