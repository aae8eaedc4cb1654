import json
import os
import subprocess
import sys

import numpy as np
import pytest

from cliffharm import fields as fl
from cliffharm import suites


def run_cli(*args, env_extra=None, cwd=None):
    env = dict(os.environ)
    env.pop("CLIFFORD_HILBERT_SEED", None)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "cliffharm", *map(str, args)],
        capture_output=True,
        text=True,
        env=env,
        cwd=cwd,
    )


def read_report(path):
    lines = [json.loads(ln) for ln in path.read_text().splitlines() if ln.strip()]
    assert lines[0]["type"] == "environment"
    return lines[0], lines[1:]


def test_registry_covers_every_suite_name():
    assert set(suites.SUITES) == set(suites.SUITE_NAMES)


def test_run_suite_in_process_smoke():
    cfg = suites.SuiteConfig(suite="algebra")
    results, extras = suites.run_suite(cfg)
    assert results and all(r.passed for r in results)
    assert {r.suite for r in results} == {"algebra"}


@pytest.mark.parametrize(
    "kwargs",
    [
        {"suite": "nonsense"},
        {"N": 12},
        {"N": 4},
        {"n": 4},
        {"mode": "sideways"},
        {"tol_overrides": {"some_case": -1.0}},
    ],
)
def test_config_validation_rejects(kwargs):
    with pytest.raises(suites.UsageError):
        suites.SuiteConfig(**kwargs)


def test_tolerance_overrides_only_loosen():
    cfg = suites.SuiteConfig(tol_overrides={"a_case": 1e-3})
    assert cfg.tolerance("a_case", 1e-6) == 1e-3
    with pytest.raises(suites.UsageError):
        cfg.tolerance("a_case", 1e-2)
    assert cfg.tolerance("other_case", 1e-6) == 1e-6


def test_report_lines_shape():
    results, _ = suites.run_suite(suites.SuiteConfig(suite="spin"))
    lines = suites.report_lines(results, seed=42)
    head = json.loads(lines[0])
    assert head["type"] == "environment" and head["seed"] == 42
    for ln in lines[1:]:
        row = json.loads(ln)
        assert set(row) == {"suite", "case", "residual", "tol", "pass"}


def test_cli_info_runs():
    p = run_cli("info")
    assert p.returncode == 0
    assert "suites" in p.stdout


def test_cli_verify_algebra_writes_report(tmp_path):
    out = tmp_path / "report.jsonl"
    p = run_cli("verify", "--suite", "algebra", "--out", out)
    assert p.returncode == 0, p.stderr
    head, rows = read_report(out)
    assert rows and all(r["pass"] for r in rows)
    assert all(r["residual"] <= r["tol"] for r in rows)
    assert "cases passed" in p.stdout


def test_cli_verify_is_deterministic(tmp_path):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    assert run_cli("verify", "--suite", "spin", "--seed", "7", "--out", a).returncode == 0
    assert run_cli("verify", "--suite", "spin", "--seed", "7", "--out", b).returncode == 0
    strip = lambda p: p.read_text().splitlines()[1:]
    assert strip(a) == strip(b)


def test_cli_rejects_unknown_suite():
    p = run_cli("verify", "--suite", "nonsense")
    assert p.returncode == 2
    assert "unknown suite" in p.stderr


def test_cli_rejects_tightened_tolerance():
    p = run_cli("verify", "--suite", "algebra", "--tol", "associativity=1e-30")
    assert p.returncode == 2


def test_cli_accepts_loosened_tolerance(tmp_path):
    out = tmp_path / "r.jsonl"
    p = run_cli("verify", "--suite", "algebra", "--tol", "associativity=1e-6", "--out", out)
    assert p.returncode == 0
    _, rows = read_report(out)
    row = next(r for r in rows if r["case"] == "associativity")
    assert row["tol"] == 1e-6


def test_cli_honest_failure_exits_one(tmp_path):
    # a grid spacing too coarse for the smallest extension height: three
    # plemelj cases miss their pinned tolerances and the run reports failure
    out = tmp_path / "fail.jsonl"
    plots = tmp_path / "plots"
    plots.mkdir()
    p = run_cli(
        "verify", "--suite", "plemelj", "--N", "16", "--L", "24",
        "--out", out, "--emit-plots", plots,
    )
    assert p.returncode == 1
    _, rows = read_report(out)
    assert any(not r["pass"] for r in rows)
    assert "FAIL" in p.stdout
    csv = (plots / "plemelj_boundary.csv").read_text().splitlines()
    assert csv[0] == "x0,residual"
    assert len(csv) == 4  # three extension heights


def test_cli_seed_precedence(tmp_path):
    conf = tmp_path / "conf.ini"
    conf.write_text("seed = 5\n")
    out = tmp_path / "r.jsonl"
    p = run_cli("verify", "--suite", "spin", "--config", conf, "--out", out)
    assert p.returncode == 0
    head, _ = read_report(out)
    assert head["seed"] == 5
    p = run_cli("verify", "--suite", "spin", "--config", conf, "--seed", "9", "--out", out)
    assert p.returncode == 0
    head, _ = read_report(out)
    assert head["seed"] == 9


def test_cli_seed_env_fallback(tmp_path):
    out = tmp_path / "r.jsonl"
    p = run_cli("verify", "--suite", "spin", "--out", out, env_extra={"CLIFFORD_HILBERT_SEED": "11"})
    assert p.returncode == 0
    head, _ = read_report(out)
    assert head["seed"] == 11


def test_cli_config_file_tolerances(tmp_path):
    conf = tmp_path / "conf.ini"
    conf.write_text("# loosen one case\ntol.associativity = 1e-6\n")
    out = tmp_path / "r.jsonl"
    p = run_cli("verify", "--suite", "algebra", "--config", conf, "--out", out)
    assert p.returncode == 0
    _, rows = read_report(out)
    row = next(r for r in rows if r["case"] == "associativity")
    assert row["tol"] == 1e-6


@pytest.fixture()
def sample_field(tmp_path):
    spec = fl.GridSpec(2, 16, 8.0)
    f = fl.make_band_limited_random(spec, "Cl2", 0.4, 31)
    path = tmp_path / "in.clf"
    fl.write_field(f, path)
    return f, path


def test_cli_transform_projections_cancel(sample_field, tmp_path):
    f, path = sample_field
    mid, out = tmp_path / "mid.clf", tmp_path / "out.clf"
    assert run_cli("transform", "chi:+", path, mid).returncode == 0
    assert run_cli("transform", "chi:-", mid, out).returncode == 0
    g = fl.read_field(out)
    assert fl.norm(g) < 1e-11 * fl.norm(f)


def test_cli_transform_hilbert_is_an_involution(sample_field, tmp_path):
    f, path = sample_field
    mid, out = tmp_path / "mid.clf", tmp_path / "out.clf"
    assert run_cli("transform", "hilbert", path, mid).returncode == 0
    assert run_cli("transform", "hilbert", mid, out).returncode == 0
    assert fl.rel_error(fl.read_field(out), f) < 1e-11


def test_cli_transform_identity_group_move_roundtrips_bytes(sample_field, tmp_path):
    _, path = sample_field
    out = tmp_path / "out.clf"
    g = "1.0|4;0:1.0,0.0|0.0,0.0"
    assert run_cli("transform", f"natrep:{g}", path, out).returncode == 0
    assert out.read_bytes() == path.read_bytes()


def test_cli_transform_json_output(sample_field, tmp_path):
    f, path = sample_field
    out = tmp_path / "out.json"
    assert run_cli("transform", "project:HardyPlus", path, out).returncode == 0
    g = fl.read_field(out)
    assert g.spec == f.spec


def test_cli_transform_bad_inputs(sample_field, tmp_path):
    _, path = sample_field
    out = tmp_path / "out.clf"
    assert run_cli("transform", "squigglify", path, out).returncode == 2
    assert run_cli("transform", "hilbert", tmp_path / "missing.clf", out).returncode == 2
    assert run_cli("transform", "riesz:7", path, out).returncode == 2


def test_emit_plots_from_extras(tmp_path):
    results, _ = suites.run_suite(suites.SuiteConfig(suite="spin"))
    extras = {
        "plemelj_rows": [(0.4, 0.1), (0.2, 0.05)],
        "commutant_sv": {"toy": np.array([3.0, 2.0, 0.0])},
    }
    written = suites.emit_plots(tmp_path, results, extras)
    assert len(written) == 2
    sv = (tmp_path / "commutant_singular_values.csv").read_text().splitlines()
    assert sv[0] == "configuration,index,singular_value"
    assert len(sv) == 4
    assert suites.emit_plots(tmp_path, [], extras) == []
