import csv
import io
import os
import json
import subprocess
import sys

import pytest

from deformed_discord import cli, sweep
from deformed_discord.errors import DegenerateBasis
from deformed_discord.sweep import SweepConfig, render

FROZEN_DC = "0.322756958897"  # kappa=1/2, alpha=0.5, p=1; equals h(1/17)


def run(*argv):
    return subprocess.run([sys.executable, "-m", "deformed_discord", *argv],
                          capture_output=True, text=True)


def parse_point(stdout):
    out = {}
    for line in stdout.splitlines():
        k, _, v = line.partition(" = ")
        out[k.strip()] = v.strip()
    return out


def test_sweep_default_csv(capsys):
    assert cli.main(["sweep"]) == 0
    text = capsys.readouterr().out
    rows = list(csv.DictReader(io.StringIO(text)))
    assert text.splitlines()[0] == "kappa,alpha,p,s,C_psi,C,EoF,DC"
    assert len(rows) == 909
    assert [r["kappa"] for r in rows[:1] + rows[-1:]] == ["0.5", "1.5"]
    zero = [r for r in rows if r["p"] == "0"]
    assert len(zero) == 9
    assert all(r["C"] == "0" and r["EoF"] == "0" and abs(float(r["DC"])) <= 1e-9 for r in zero)
    for r in (r for r in rows if r["p"] == "1"):
        assert abs(float(r["DC"]) - float(r["EoF"])) <= 1e-9


def test_sweep_json_and_oracle_columns(capsys):
    assert cli.main(["sweep", "--format", "json", "--p-steps", "3", "--alphas", "0.5",
                     "--kappas", "1/2", "--compare-oracle"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert len(data) == 3
    assert list(data[0]) == ["kappa", "alpha", "p", "s", "C_psi", "C", "EoF", "DC",
                             "DC_numeric", "DC_absdiff"]
    assert data[-1]["DC"] == float(FROZEN_DC)
    assert all(d["DC_absdiff"] <= 1e-9 for d in data)


def test_sweep_identity_deformation(capsys):
    assert cli.main(["sweep", "--deformation", "identity", "--p-steps", "2"]) == 0
    rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
    assert len(rows) == 6
    assert all(r["kappa"] == "" for r in rows)


def test_sweep_error_row_isolated(monkeypatch):
    real = sweep.evaluate_point

    def flaky(alpha, spec, p, compare_oracle=False):
        if p == 0.5:
            raise DegenerateBasis("injected")
        return real(alpha, spec, p, compare_oracle)

    monkeypatch.setattr(sweep, "evaluate_point", flaky)
    err = io.StringIO()
    text, n_err = render(SweepConfig(alphas=[0.5], kappas=[1.0], p_steps=3), stderr=err)
    rows = list(csv.DictReader(io.StringIO(text)))
    assert n_err == 1 and len(rows) == 3
    assert rows[1]["p"] == "0.5" and rows[1]["DC"] == "" and rows[1]["s"] == ""
    assert rows[0]["DC"] != "" and rows[2]["DC"] != ""
    assert "injected" in err.getvalue()


@pytest.mark.parametrize("argv", [
    ["sweep", "--alphas", "1.2"],
    ["sweep", "--kappas", "0.7"],
    ["sweep", "--p-steps", "1"],
])
def test_sweep_bad_arguments(argv):
    assert cli.main(argv) == 2


def test_sweep_writes_file(tmp_path):
    out = tmp_path / "s.csv"
    assert cli.main(["sweep", "--p-steps", "2", "--out", str(out)]) == 0
    assert len(out.read_text().splitlines()) == 19


def test_point_frozen_value(capsys):
    assert cli.main(["point", "--alpha", "0.5", "--kappa", "1/2", "--p", "1",
                     "--compare-oracle"]) == 0
    vals = parse_point(capsys.readouterr().out)
    assert vals["s"] == "0.6"
    assert vals["DC"] == FROZEN_DC
    assert vals["EoF"] == FROZEN_DC
    assert abs(float(vals["DC_numeric"]) - float(FROZEN_DC)) <= 1e-9
    assert vals["I_mutual"] == "0.645513917795"
    assert vals["C_printed_formula"].startswith("undefined")


@pytest.mark.parametrize("argv", [
    ["point", "--alpha", "1.5", "--p", "0.5"],
    ["point", "--alpha", "0", "--p", "0.5"],
    ["point", "--alpha", "0.5", "--p", "1.5"],
    ["point", "--alpha", "0.5", "--kappa", "0.3", "--p", "0.5"],
])
def test_point_domain_errors(argv, capsys):
    assert cli.main(argv) == 2
    assert "error" in capsys.readouterr().err


def test_point_usage_error_exit_code():
    assert run("point", "--alpha", "x", "--p", "0").returncode == 2


def test_verify_fast_passes():
    r = run("verify", "--fast")
    assert r.returncode == 0, r.stderr
    assert "all checks passed" in r.stdout
    assert "189 points" in r.stdout


def test_verify_detects_natural_log_fault():
    r = run("verify", "--fast", "--inject-fault", "natural-log")
    assert r.returncode == 1
    assert "FAILED: zero_discord_baseline" in r.stderr


def test_plot_script(tmp_path):
    data = tmp_path / "s.csv"
    assert cli.main(["sweep", "--p-steps", "5", "--compare-oracle", "--out", str(data)]) == 0
    script = tmp_path / "plot.py"
    assert cli.main(["plot-script", "--in", str(data), "--out", str(script)]) == 0
    text = script.read_text()
    compile(text, str(script), "exec")
    assert "SHOW_DEVIATION = True" in text
    assert "tab:green" in text and "tab:purple" in text and "tab:red" in text


def test_plot_script_without_oracle_columns(tmp_path):
    data = tmp_path / "s.csv"
    cli.main(["sweep", "--p-steps", "3", "--out", str(data)])
    script = tmp_path / "plot.py"
    assert cli.main(["plot-script", "--in", str(data), "--out", str(script)]) == 0
    assert "SHOW_DEVIATION = False" in script.read_text()


@pytest.mark.parametrize("content", ["", "kappa,alpha\n0.5,0.1\n", "kappa,alpha,p,s,C_psi,C,EoF,DC\n"])
def test_plot_script_rejects_malformed_csv(tmp_path, content, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text(content)
    assert cli.main(["plot-script", "--in", str(bad), "--out", str(tmp_path / "x.py")]) == 2
    assert "error" in capsys.readouterr().err


def test_plot_script_missing_file(tmp_path):
    assert cli.main(["plot-script", "--in", str(tmp_path / "nope.csv"),
                     "--out", str(tmp_path / "x.py")]) == 2


def test_python_fallback_selected_by_environment():
    env = dict(os.environ, DEFORMED_DISCORD_BACKEND="python")
    r = subprocess.run([sys.executable, "-m", "deformed_discord", "verify", "--fast"],
                       capture_output=True, text=True, env=env)
    assert r.returncode == 0, r.stderr
    assert "kernel backend: python" in r.stdout
