import json

import pandas as pd

from cli import main, run_table
from config import config
from errors import EXIT_RESOURCE, EXIT_USAGE


def test_solve_writes_json_report(tmp_path):
    out = tmp_path / "report.json"
    code = main(
        ["solve", "--example", "1", "--alpha", "1.2", "--n", "63", "--precond", "tau", "--out", str(out)]
    )
    assert code == 0
    report = json.loads(out.read_text())
    for key in ["manifest", "iterations", "residual_history", "lambda_min", "lambda_max", "max_error", "wall_ms"]:
        assert key in report
    assert abs(report["iterations"] - 5) <= 1
    assert report["residual_history"][0] == 1.0
    assert report["max_error"] < 0.0625
    assert report["manifest"]["command"] == "solve"


def test_solve_csv_writes_residuals(tmp_path):
    out = tmp_path / "report.csv"
    assert main(["solve", "--example", "2", "--n", "15", "--format", "csv", "--out", str(out)]) == 0
    assert pd.read_csv(out)["iterations"].iloc[0] > 0
    assert (tmp_path / "report_residuals.csv").exists()


def test_negative_tolerance_is_usage_error():
    assert main(["solve", "--example", "1", "--precond", "tau", "--tol", "-1"]) == EXIT_USAGE


def test_explicit_problem(tmp_path):
    out = tmp_path / "box.json"
    code = main(
        [
            "solve", "--dim", "2", "--alpha", "1.3", "1.6", "--d", "0.5", "2.0",
            "--domain", "0", "1", "-1", "1", "--n", "15", "--out", str(out),
        ]
    )
    assert code == 0
    assert json.loads(out.read_text())["size"] == 225


def test_example_with_domain_is_usage_error():
    assert main(["solve", "--example", "1", "--domain", "0", "2"]) == EXIT_USAGE


def test_banded_on_2d_is_usage_error():
    assert main(["solve", "--example", "2", "--n", "7", "--precond", "banded"]) == EXIT_USAGE


def test_dense_spectrum_above_cap_is_resource_error():
    assert main(["spectrum", "--example", "2", "--n", "127", "--method", "dense"]) == EXIT_RESOURCE


def test_spectrum_report_and_eigenvalues(tmp_path):
    out = tmp_path / "spectrum.json"
    csv = tmp_path / "eigenvalues.csv"
    code = main(
        [
            "spectrum", "--example", "1", "--alpha", "1.5", "--n", "64",
            "--eigenvalues-csv", str(csv), "--out", str(out),
        ]
    )
    assert code == 0
    report = json.loads(out.read_text())
    assert 0.5 < report["lambda_min"] <= report["lambda_max"] < 1.5
    assert report["condition_number"] < 3.0
    assert len(pd.read_csv(csv)) == 64


def test_raw_spectrum_with_no_preconditioner(tmp_path):
    out = tmp_path / "raw.json"
    assert main(["spectrum", "--example", "1", "--n", "31", "--precond", "none", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["condition_number"] > 10.0


def test_unknown_table_is_usage_error():
    assert main(["table", "--table", "9"]) == EXIT_USAGE


def test_table_layout(tmp_path):
    out = tmp_path / "table1.csv"
    assert main(["table", "--table", "1", "--max-size", "64", "--out", str(out)]) == 0
    frame = pd.read_csv(out)
    assert list(frame.columns[:6]) == ["alpha", "size", "tau_pre", "C_pre", "B_pre", "N_pre"]
    assert list(frame["size"]) == [64, 64, 64]
    assert "tau_pre_wall_ms" in frame.columns


def test_table_multigrid_columns_are_skipped():
    frame = run_table(2, 64)
    assert list(frame["M_pre"]) == ["-"] * 4
    assert list(frame["MGM"]) == ["-"] * 4


def test_rerun_reproduces_iterations(tmp_path):
    out = tmp_path / "report.json"
    main(["solve", "--example", "2", "--n", "15", "--precond", "circulant", "--out", str(out)])
    first = json.loads(out.read_text())
    assert main(["rerun", "--manifest", str(out)]) == 0
    second = json.loads(out.read_text())
    assert second["iterations"] == first["iterations"]
    assert second["residual_history"] == first["residual_history"]


def test_rerun_of_missing_manifest_is_usage_error(tmp_path):
    assert main(["rerun", "--manifest", str(tmp_path / "missing.json")]) == EXIT_USAGE


def test_random_lanczos_seed_is_recorded(tmp_path):
    out = tmp_path / "lanczos.json"
    code = main(
        ["spectrum", "--example", "1", "--n", "63", "--method", "lanczos", "--seed", "-1", "--out", str(out)]
    )
    assert code == 0
    manifest = json.loads(out.read_text())["manifest"]
    assert manifest["seed"] >= 0
    assert manifest["argv"][-2:] == ["--seed", str(manifest["seed"])]


def test_example4_rhs_seed_is_recorded(tmp_path):
    out = tmp_path / "example4.json"
    assert main(["solve", "--example", "4", "--n", "7", "--seed", "5", "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    assert report["manifest"]["seed"] == 5
    assert report["converged"]


def test_example4_random_seed_replays(tmp_path):
    out = tmp_path / "example4.json"
    assert main(["solve", "--example", "4", "--n", "7", "--seed", "-1", "--out", str(out)]) == 0
    first = json.loads(out.read_text())
    seed = first["manifest"]["seed"]
    assert seed >= 0
    assert first["manifest"]["argv"][-2:] == ["--seed", str(seed)]

    assert main(["rerun", "--manifest", str(out)]) == 0
    second = json.loads(out.read_text())
    assert second["manifest"]["seed"] == seed
    assert second["residual_history"] == first["residual_history"]


def test_riesz_solve_records_no_seed(tmp_path):
    out = tmp_path / "example1.json"
    assert main(["solve", "--example", "1", "--n", "15", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["manifest"]["seed"] is None


def test_threaded_table_keeps_cell_order(monkeypatch):
    serial = run_table(1, 64)
    monkeypatch.setattr(config, "threads", 2)
    threaded = run_table(1, 64)
    assert list(threaded["alpha"]) == ["1.2", "1.5", "1.8"]
    for column in ["tau_pre", "C_pre", "B_pre", "N_pre"]:
        assert list(threaded[column]) == list(serial[column])
