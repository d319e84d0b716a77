"""Experiment configuration, runners on reduced workloads, emitted artifact
structure, and the command-line entry point."""

import json
import os
import subprocess
import sys

import numpy as np
import pytest

from sincmat import (
    ConfigError,
    EXPERIMENTS,
    config_from_file,
    make_config,
    resolve_M,
    run_experiment,
)
from sincmat.cli import main

# --- configuration ---------------------------------------------------------


def test_experiment_names():
    assert EXPERIMENTS == (
        "table1",
        "fixed-c-hist",
        "hermite",
        "survey",
        "bounds",
        "pswf",
    )


def test_defaults_per_experiment():
    t = make_config("table1")
    assert (t.c, t.N, t.M, t.trials) == (1.0, 5, "auto", 21)
    assert t.base_seed == 20260814
    assert t.emit == ("csv", "json", "svg")
    s = make_config("survey")
    assert s.c == (5.0, 10.0, 20.0, 40.0)
    assert s.N == 500
    h = make_config("hermite")
    assert h.c == 100.0


def test_make_config_overrides_and_validation():
    cfg = make_config("table1", N=7, trials=3, emit=["json"])
    assert cfg.N == 7 and cfg.emit == ("json",)
    with pytest.raises(ConfigError):
        make_config("unknown-experiment")
    with pytest.raises(ConfigError):
        make_config("table1", frobnicate=1)  # unknown field
    with pytest.raises(ConfigError):
        make_config("table1", c=-1.0)
    with pytest.raises(ConfigError):
        make_config("table1", N=0)
    with pytest.raises(ConfigError):
        make_config("table1", M=0)
    with pytest.raises(ConfigError):
        make_config("table1", M="automatic")
    with pytest.raises(ConfigError):
        make_config("table1", trials=0)
    with pytest.raises(ConfigError):
        make_config("table1", base_seed=1 << 64)
    with pytest.raises(ConfigError):
        make_config("table1", emit=["csv", "pdf"])
    with pytest.raises(ConfigError):
        make_config("table1", N=True)  # bools are not ints here


def test_config_from_file(tmp_path):
    p = tmp_path / "cfg.json"
    p.write_text(json.dumps({"experiment": "table1", "N": 9, "trials": 2}))
    cfg = config_from_file(p)
    assert cfg.experiment == "table1" and cfg.N == 9 and cfg.trials == 2
    # explicit experiment must agree with the file
    with pytest.raises(ConfigError):
        config_from_file(p, experiment="survey")
    # overrides win over file values; None overrides are ignored
    cfg2 = config_from_file(p, N=11, base_seed=None)
    assert cfg2.N == 11 and cfg2.base_seed == 20260814


def test_config_from_file_errors(tmp_path):
    with pytest.raises(ConfigError):
        config_from_file(tmp_path / "missing.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ConfigError):
        config_from_file(bad)


def test_resolve_M_regimes():
    assert resolve_M(12, 6.0, "fixed-c") == 12
    assert resolve_M("auto", 1.0, "fixed-c") == 4
    assert resolve_M("auto", 6.0, "fixed-c") == 19
    assert resolve_M("auto", 100.0, "hermite") == 50
    assert resolve_M("auto", 10.0, "pswf") == 40
    with pytest.raises(ConfigError):
        resolve_M("auto", 6.0, "other")


# --- runners on reduced workloads ------------------------------------------


def _run(tmp_path, experiment, **fields):
    cfg = make_config(experiment, output_dir=str(tmp_path / experiment), **fields)
    payload = run_experiment(cfg)
    return cfg, payload


def test_run_table1_artifacts(tmp_path):
    cfg, payload = _run(tmp_path, "table1", trials=3)
    out = tmp_path / "table1"
    for name in ("table1.csv", "table1.json", "table1.svg", "run.log"):
        assert (out / name).exists()
    doc = json.loads((out / "table1.json").read_text())
    assert doc["config"]["experiment"] == "table1"
    assert len(doc["seeds"]) == 3
    assert "version" in doc
    rows = doc["rows"]
    assert [r["M"] for r in rows] == [2, 4, 6, 8, 10, 12, 14, 16, 18, 20]
    means = [r["mean"] for r in rows]
    assert means[0] > means[-1]
    # csv carries one line per M plus header
    lines = (out / "table1.csv").read_text().strip().splitlines()
    assert len(lines) == 11


def test_emit_subsets_honored(tmp_path):
    _run(tmp_path, "table1", trials=2, emit=["json"])
    out = tmp_path / "table1"
    assert (out / "table1.json").exists()
    assert not (out / "table1.csv").exists()
    assert not (out / "table1.svg").exists()
    assert (out / "run.log").exists()  # always written


def test_run_fixed_c_hist_small(tmp_path):
    cfg, payload = _run(tmp_path, "fixed-c-hist", N=300, trials=3)
    out = tmp_path / "fixed-c-hist"
    doc = json.loads((out / "fixed_c_hist.json").read_text())
    assert doc["M"] == 6  # pinned default for this experiment
    assert len(doc["t_eigenvalues"]) == doc["M"]
    assert doc["mean_gap"] >= 0
    assert list(doc["gap_by_N"].keys()) == ["300"]
    pooled = (out / "pooled_eigs.csv").read_text().strip().splitlines()
    assert len(pooled) == 1 + 3 * doc["M"]  # header + trials * M


def test_run_hermite_small(tmp_path):
    cfg, payload = _run(tmp_path, "hermite", c=30.0, M=10)
    out = tmp_path / "hermite"
    doc = json.loads((out / "hermite.json").read_text())
    assert doc["l2_error"] <= doc["bound"]["value"]
    assert doc["l2_error"] < doc["l2_error_n0"]  # more modes help
    csv_lines = (out / "hermite_pointwise.csv").read_text().strip().splitlines()
    assert len(csv_lines) == 402  # header + 401 grid points


def test_run_survey_small(tmp_path):
    cfg, payload = _run(tmp_path, "survey", c=[2.0, 4.0], N=150)
    out = tmp_path / "survey"
    doc = json.loads((out / "survey.json").read_text())
    assert doc["c_values"] == [2.0, 4.0]
    assert len(doc["counts"]) == 2
    for full, raw in zip(doc["counts"], doc["counts_raw"]):
        assert full >= raw
    assert abs(doc["slope_target"] - 2.0 / np.pi) < 1e-12
    assert (out / "survey_counts.csv").exists()
    assert (out / "survey_eigs_c2.csv").exists()
    assert (out / "survey_eigs_c4.csv").exists()


def test_run_bounds_small(tmp_path):
    cfg, payload = _run(tmp_path, "bounds", c=[1.0, 2.0], trials=4)
    out = tmp_path / "bounds"
    doc = json.loads((out / "bounds_report.json").read_text())
    for section in (
        "residual_tail",
        "expected_residual",
        "mcdiarmid",
        "chernoff",
        "hermite_tail",
        "sup_scan",
    ):
        assert section in doc
    for row in doc["residual_tail"]:
        assert set(row) >= {"c", "M", "bound", "measured_tail", "dominates"}


def test_run_pswf_small(tmp_path):
    cfg, payload = _run(tmp_path, "pswf", c=[2.0])
    out = tmp_path / "pswf"
    doc = json.loads((out / "pswf.json").read_text())
    tab = doc["tables"][0]
    assert abs(tab["sum_lambda"] - tab["two_c_over_pi"]) < 1e-6
    assert tab["count_ge_half"] == 1
    assert (out / "pswf_c2.csv").exists()


def test_svg_second_line_is_version_comment(tmp_path):
    _run(tmp_path, "table1", trials=2)
    svg = (tmp_path / "table1" / "table1.svg").read_text().splitlines()
    assert svg[0].startswith("<svg ")
    assert svg[1].startswith("<!-- sincmat ")


def test_rerun_identical_bytes(tmp_path):
    cfg, _ = _run(tmp_path, "table1", trials=3)
    out = tmp_path / "table1"
    first = {
        n: (out / n).read_bytes() for n in ("table1.csv", "table1.json", "table1.svg")
    }
    run_experiment(cfg)
    for n, blob in first.items():
        assert (out / n).read_bytes() == blob


def test_threads_do_not_change_results(tmp_path):
    cfg1 = make_config("survey", c=[2.0, 3.0], N=120, output_dir=str(tmp_path / "a"))
    cfg2 = make_config("survey", c=[2.0, 3.0], N=120, output_dir=str(tmp_path / "b"))
    run_experiment(cfg1, threads=1)
    run_experiment(cfg2, threads=4)
    a = json.loads((tmp_path / "a" / "survey.json").read_text())
    b = json.loads((tmp_path / "b" / "survey.json").read_text())
    a["config"].pop("output_dir")
    b["config"].pop("output_dir")
    assert a == b


# --- command-line interface -------------------------------------------------


def test_cli_success_lists_files(tmp_path, capsys):
    rc = main(
        ["table1", "--out", str(tmp_path / "o"), "--seed", "7", "--threads", "1"]
    )
    assert rc == 0
    printed = capsys.readouterr().out
    assert "table1.json" in printed
    doc = json.loads((tmp_path / "o" / "table1.json").read_text())
    assert doc["config"]["base_seed"] == 7


def test_cli_config_file_and_override(tmp_path, capsys):
    p = tmp_path / "cfg.json"
    p.write_text(json.dumps({"experiment": "pswf", "c": [2.0], "emit": ["json"]}))
    rc = main(["pswf", "--config", str(p), "--out", str(tmp_path / "o2")])
    assert rc == 0
    assert (tmp_path / "o2" / "pswf.json").exists()


def test_cli_bad_config_exits_2(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text("{broken")
    assert main(["table1", "--config", str(p)]) == 2
    err = capsys.readouterr().err
    assert err.strip() != ""


def test_cli_invalid_flag_value_exits_2(tmp_path):
    assert main(["table1", "--out", str(tmp_path), "--threads", "0"]) == 2


def test_cli_numerical_failure_exits_3(tmp_path, capsys):
    p = tmp_path / "cfg.json"
    # M far below the solvable prolate floor triggers a numerical-domain error
    p.write_text(json.dumps({"experiment": "pswf", "c": [2.0], "M": 3}))
    assert main(["pswf", "--config", str(p), "--out", str(tmp_path / "o3")]) == 3


def test_cli_threads_env(tmp_path):
    env = dict(os.environ, SINCMAT_THREADS="2")
    out = subprocess.run(
        [
            sys.executable,
            "-m",
            "sincmat",
            "survey",
            "--out",
            str(tmp_path / "env"),
        ],
        env=env,
        capture_output=True,
        text=True,
    )
    assert out.returncode == 0
    log = (tmp_path / "env" / "run.log").read_text()
    assert "threads=2" in log


def test_cli_version_flag():
    out = subprocess.run(
        [sys.executable, "-m", "sincmat", "--version"],
        capture_output=True,
        text=True,
    )
    assert out.returncode == 0
    from sincmat import __version__

    assert __version__ in out.stdout
