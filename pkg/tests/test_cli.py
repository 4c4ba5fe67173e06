import json
import subprocess
import sys
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from varreg import cli
from varreg.checks import CheckResult
from varreg.errors import BranchAmbiguity, NoConvergence


def run(*argv):
    return cli.main([str(a) for a in argv])


def test_boundary_preset(tmp_path):
    out = tmp_path / "c.csv"
    svg = tmp_path / "c.svg"
    assert run("boundary", "--preset", "1L", "--out", out, "--svg", svg) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "theta,re,im" and len(lines) == 513
    theta, re, im = lines[1].split(",")
    assert float(re) == float(f"{float(re):.17g}")
    meta = json.loads((tmp_path / "c.json").read_text())
    assert meta["convex"] and meta["simple"] and not meta["singleton"]
    assert meta["params"]["mu"] == [32796.0, 64560.2]
    root = ET.fromstring(svg.read_text())
    ns = "{http://www.w3.org/2000/svg}"
    assert root.tag == f"{ns}svg" and root.get("version") == "1.1"
    assert len(root.findall(f"{ns}polyline")) == 1
    assert len(root.get("viewBox").split()) == 4


def test_boundary_is_byte_identical(tmp_path):
    for tag in ("a", "b"):
        assert run("boundary", "--preset", "3R", "--samples", 64, "--out", tmp_path / f"{tag}.csv",
                   "--svg", tmp_path / f"{tag}.svg") == 0
    for ext in ("csv", "json", "svg"):
        assert (tmp_path / f"a.{ext}").read_bytes() == (tmp_path / f"b.{ext}").read_bytes()


def test_boundary_singleton(tmp_path):
    out = tmp_path / "s.csv"
    assert run("boundary", "--z0", "0,0", "--lambda", "0.2,0.1", "--mu", "3,0", "--out", out) == 0
    assert out.read_text().splitlines() == ["theta,re,im", "0,0,0"]
    assert json.loads((tmp_path / "s.json").read_text())["singleton"] is True


def test_boundary_all_presets(tmp_path):
    assert run("boundary", "--preset", "all", "--samples", 32, "--out", tmp_path / "curves") == 0
    assert len(list((tmp_path / "curves").glob("*.csv"))) == 12


@pytest.mark.parametrize("argv", [
    ["--z0", "0.5,0", "--lambda", "0,0", "--mu=-1,0"],
    ["--z0", "1.5,0", "--lambda", "0,0", "--mu", "1,0"],
    ["--z0", "0.5,0", "--lambda", "2,0", "--mu", "1,0"],
    ["--z0", "0.5,0", "--lambda", "0,0"],
    ["--preset", "9Q"],
    ["--z0", "zz", "--lambda", "0,0", "--mu", "1,0"],
])
def test_invalid_parameters_exit_2(argv, tmp_path):
    assert run("boundary", *argv, "--out", tmp_path / "x.csv") == 2


def test_quadrature_failure_exit_3(tmp_path, monkeypatch):
    def boom(*a, **k):
        raise NoConvergence("budget")
    monkeypatch.setattr(cli, "boundary_curve", boom)
    assert run("boundary", "--preset", "1L", "--out", tmp_path / "x.csv") == 3


def test_bounds_radial_with_curve(tmp_path, capsys):
    curve = tmp_path / "c.csv"
    run("boundary", "--preset", "1L", "--out", curve)
    capsys.readouterr()
    assert run("bounds", "--preset", "1L", "--curve", curve) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["curve_contained"] and report["radius"] > 0


def test_bounds_gamma0(tmp_path):
    out = tmp_path / "b.json"
    assert run("bounds", "--preset", "1L", "--path", "gamma0", "--theta", 0, "--out", out) == 0
    report = json.loads(out.read_text())
    assert report["tangency_residual"] < 1e-6 and report["direction_error"] < 1e-6


def test_bounds_unimodular_lambda(capsys):
    assert run("bounds", "--z0", "0.5,0.1", "--lambda", "0.6,0.8", "--mu", "3,1") == 0
    assert json.loads(capsys.readouterr().out)["radius"] == 0


def test_bounds_branch_failure_exit_3(monkeypatch, capsys):
    def boom(*a, **k):
        raise BranchAmbiguity("start 1: ended elsewhere; start -1: left disk")
    monkeypatch.setattr(cli, "check_tangency", boom)
    assert run("bounds", "--preset", "2L", "--path", "gamma0") == 3
    assert "start 1: ended elsewhere" in capsys.readouterr().err


def test_sample(tmp_path):
    out = tmp_path / "s.csv"
    assert run("sample", "--preset", "1L", "--count", 200, "--seed", 7, "--out", out) == 0
    summary = json.loads((tmp_path / "s.json").read_text())
    assert summary["outsiders"] == 0 and summary["count"] == 200
    assert 0 < summary["fill_ratio"] <= 1
    rows = out.read_text().splitlines()
    assert rows[0] == "index,seed,re,im,verdict" and len(rows) == 201
    again = tmp_path / "t.csv"
    run("sample", "--preset", "1L", "--count", 200, "--seed", 7, "--out", again)
    assert out.read_bytes() == again.read_bytes()


def test_sample_empty(tmp_path):
    out = tmp_path / "e.csv"
    assert run("sample", "--preset", "2R", "--count", 0, "--out", out) == 0
    assert out.read_text() == "index,seed,re,im,verdict\n"


def test_sample_outsider_exit_4(tmp_path, monkeypatch):
    monkeypatch.setattr(cli, "log_f_batch",
                        lambda members, z0, tol: (np.full(len(members), 1e9 + 0j), None))
    assert run("sample", "--preset", "1L", "--count", 3, "--out", tmp_path / "s.csv") == 4


def test_verify_quick(tmp_path, capsys):
    report = tmp_path / "v.json"
    assert run("verify", "--preset", "5R", "--quick", "--json", report) == 0
    assert "1/1 parameter sets pass" in capsys.readouterr().out
    assert json.loads(report.read_text())["passed"] == 1


def test_verify_lambda_zero_runs_closed_form_grid(capsys):
    assert run("verify", "--z0", "0.3,0.2", "--lambda", "0,0", "--mu", "3.14159,0", "--quick") == 0
    assert "lambda_zero_closed_form" in capsys.readouterr().out


def test_verify_failure_exit_5(monkeypatch, capsys):
    monkeypatch.setattr(cli, "run_suite",
                        lambda *a, **k: [CheckResult("convex", True, 0, 1e-9),
                                         CheckResult("tangency_residual", False, 1.0, 1e-6)])
    assert run("verify", "--preset", "1L") == 5
    assert "1L:tangency_residual" in capsys.readouterr().err


def test_env_tolerance(tmp_path, monkeypatch):
    monkeypatch.setenv("VARREG_TOL", "1e-8")
    run("boundary", "--preset", "2L", "--samples", 32, "--out", tmp_path / "a.csv")
    assert json.loads((tmp_path / "a.json").read_text())["tol"] == 1e-8
    run("boundary", "--preset", "2L", "--samples", 32, "--tol", 1e-11, "--out", tmp_path / "b.csv")
    assert json.loads((tmp_path / "b.json").read_text())["tol"] == 1e-11
    monkeypatch.setenv("VARREG_TOL", "fast")
    assert run("boundary", "--preset", "2L", "--out", tmp_path / "c.csv") == 2


def test_module_entry_point(tmp_path):
    res = subprocess.run([sys.executable, "-m", "varreg", "boundary", "--preset", "5R",
                          "--samples", "16", "--out", str(tmp_path / "m.csv")],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert (tmp_path / "m.csv").exists()
    res = subprocess.run([sys.executable, "-m", "varreg", "frobnicate"], capture_output=True)
    assert res.returncode == 2
