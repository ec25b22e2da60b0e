"""End-to-end checks of the command-line interface."""

import csv
import os
import subprocess

import pytest

CLI = os.environ.get("FTSTAB_CLI")

pytestmark = pytest.mark.skipif(CLI is None, reason="FTSTAB_CLI not set")


def run(*args, **kwargs):
    return subprocess.run([CLI, *args], capture_output=True, text=True, **kwargs)


def test_zeta_value_and_validation():
    out = run("zeta", "--p", "1.9")
    assert out.returncode == 0
    assert abs(float(out.stdout.strip()) - 1.7497) < 1e-4

    bad = run("zeta", "--p", "0.5")
    assert bad.returncode == 2
    assert "diverge" in bad.stderr


def test_schedule_table():
    out = run("schedule", "--case", "II", "--T0", "1.5", "--n-max", "2")
    assert out.returncode == 0
    rows = list(csv.DictReader(out.stdout.splitlines()))
    assert [float(r["t_n"]) for r in rows] == [0.0, 0.75, 1.0]
    assert float(rows[2]["lambda_n"]) == 67.5


def test_kernel_csv(tmp_path):
    out_path = tmp_path / "gain.csv"
    out = run("kernel", "--lambda", "4.5", "--c", "24", "--N", "101",
              "--out", str(out_path))
    assert out.returncode == 0
    rows = list(csv.DictReader(out_path.read_text().splitlines()))
    assert len(rows) == 101
    assert float(rows[0]["k1y"]) == 0.0
    # deterministic regeneration
    out_path2 = tmp_path / "gain2.csv"
    run("kernel", "--lambda", "4.5", "--c", "24", "--N", "101",
        "--out", str(out_path2))
    assert out_path.read_bytes() == out_path2.read_bytes()


def test_simulate_open_loop_config(tmp_path):
    cfg = tmp_path / "open.cfg"
    cfg.write_text(
        "case = open_loop\n"
        "t_end = 0.05\n"
        "N = 101\n"
        "dt_base = 1e-3\n"
        f"out_dir = {tmp_path / 'out'}\n")
    out = run("simulate", "--config", str(cfg))
    assert out.returncode == 0, out.stderr
    trace = (tmp_path / "out" / "trace.csv").read_text().splitlines()
    assert trace[0] == "t,l2_u,linf_u,U,V,W,d1"
    assert len(trace) > 2
    assert (tmp_path / "out" / "report.txt").exists()
    assert (tmp_path / "out" / "plot.gp").exists()


def test_config_validation_exit_code(tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("case = I\nA = -2\n")
    out = run("simulate", "--config", str(cfg))
    assert out.returncode == 2
    assert "'A'" in out.stderr

    divergent = tmp_path / "divergent.cfg"
    divergent.write_text("case = I\np = 1.0\nN = 51\n")
    out = run("simulate", "--config", str(divergent))
    assert out.returncode == 2
    assert "diverge" in out.stderr


def test_unknown_preset_exit_code():
    out = run("preset", "--name", "not-a-preset")
    assert out.returncode == 2
    assert "unknown preset" in out.stderr


def test_numerical_failure_exit_code(tmp_path):
    # dt * c tuned so the implicit system is exactly singular
    cfg = tmp_path / "singular.cfg"
    cfg.write_text(
        "case = open_loop\n"
        "c = 12\n"
        "N = 3\n"
        "dt_base = 0.25\n"
        "t_end = 0.5\n"
        f"out_dir = {tmp_path / 'out'}\n")
    out = run("simulate", "--config", str(cfg))
    assert out.returncode == 3
    assert "singular" in out.stderr


def test_sweep(tmp_path):
    cfg = tmp_path / "sweep.cfg"
    cfg.write_text(
        "case = II\n"
        "T0 = 1.5\n"
        "N = 101\n"
        "dt_base = 1e-3\n"
        "stride = 20\n")
    out_csv = tmp_path / "sweep.csv"
    out = run("sweep", "--config", str(cfg), "--axis", "A",
              "--values", "0,1,2", "--out", str(out_csv))
    assert out.returncode == 0, out.stderr
    rows = list(csv.DictReader(out_csv.read_text().splitlines()))
    assert len(rows) == 3
    assert all(r["status"] == "ok" for r in rows)
    sups = [float(r["iss_window_sup"]) for r in rows]
    assert sups[0] <= sups[1] <= sups[2]
