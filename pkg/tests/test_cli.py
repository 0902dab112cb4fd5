import csv
import io
import json
import math
import re
import subprocess
import sys

import pytest

from infobound.cli import main
from infobound.quantum import CSV_COLUMNS
from infobound.report import COLUMNS


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_proc(*argv):
    return subprocess.run(
        [sys.executable, "-m", "infobound", *argv], capture_output=True, check=False
    )


def test_cosmo_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "cosmo")
    assert code == 0
    d = json.loads(out)
    assert list(d) == ["a", "particle_horizon_m", "event_horizon_m", "hubble_radius_m"]
    assert d["event_horizon_m"] == pytest.approx(1.5668036616756916e26, rel=1e-9)


def test_global_options_after_subcommand(capsys):
    _, before, _ = run(capsys, "--format", "json", "cosmo", "--a", "0.5")
    _, after, _ = run(capsys, "cosmo", "--a", "0.5", "--format", "json")
    assert before == after


def test_infinite_event_horizon(capsys, tmp_path):
    cfg = tmp_path / "m.conf"
    cfg.write_text("omega_m = 1\nomega_r = 0\nomega_lambda = 0\n")
    code, out, _ = run(capsys, "--config", str(cfg), "--format", "json", "cosmo")
    assert code == 0 and json.loads(out)["event_horizon_m"] == "infinite"


def test_bound_json(capsys):
    code, out, _ = run(
        capsys, "bound", "--format", "json", "--mass", "1.989e30", "--epoch", "1e-34",
        "--inflation-radius", "3e-26",
    )
    assert code == 0
    d = json.loads(out)
    assert abs(d["log10_bits"] - 122) <= 1
    assert d["specifiability_limit_qubits"] == 406
    text = json.dumps(d)
    assert "marginal" in text


def test_text_prints_decimal_and_log10(capsys):
    _, out, _ = run(capsys, "bound")
    assert re.search(r"bits\s+2\.895592e\+122\s+\(log10 122\.4617\)", out)


def test_vacuum_table_and_series(capsys, tmp_path):
    path = tmp_path / "series.csv"
    code, out, _ = run(capsys, "vacuum", "--format", "json", "--n-max", "10", "--series", str(path))
    assert code == 0
    d = json.loads(out)
    schemes = [s["scheme"] for s in d["schemes"]]
    assert schemes[0] == "discrete-sum"
    for s in d["schemes"]:
        assert s["pressure_J_m3"] == -s["rho_J_m3"]
    raw = path.read_bytes()
    rows = list(csv.reader(io.StringIO(raw.decode())))
    assert rows[0] == ["t_s", "a", "rho_J_m3", "residual"]
    assert len(rows) == 1 + 64
    assert b"\r\n" in raw
    assert all(float(r[3]) < 0 for r in rows[1:])


def test_qubit_csv(capsys, tmp_path):
    path = tmp_path / "exp.csv"
    code, out, _ = run(
        capsys, "qubit", "--n", "6", "--depth", "5", "--trials", "3", "--out", str(path),
        "--format", "json",
    )
    assert code == 0
    d = json.loads(out)
    assert d["compressor_id"] == "zlib-deflate-level9"
    assert d["specifiability"]["verdict"] == "within-bound"
    header = path.read_text().splitlines()[0]
    assert header == ",".join(CSV_COLUMNS)


@pytest.mark.parametrize(
    "argv, key, value",
    [
        (["collisions", "--initial-angle", "1e-12", "--amplification", "10"], "collisions_to_order_unity", 12),
        (["collisions"], "collisions_to_order_unity", 38),
        (["lyapunov", "--lyapunov", "0.6931471805599453", "--budget", "10"], "horizon_s", 10.0),
    ],
)
def test_predict_modes(capsys, argv, key, value):
    code, out, _ = run(capsys, "predict", *argv, "--format", "json")
    assert code == 0
    assert json.loads(out)[key] == pytest.approx(value, rel=1e-12)


def test_predict_recurrence_and_redshift(capsys):
    _, out, _ = run(capsys, "predict", "recurrence", "--format", "json")
    d = json.loads(out)
    assert "max-representable-time" in json.dumps(d) and "max-exponent-argument" in json.dumps(d)
    _, out, _ = run(capsys, "predict", "redshift", "--format", "json")
    assert json.loads(out)["cutoff_s"] == pytest.approx(1e-6 * math.log(1e122), rel=1e-12)


def test_report_default_passes(capsys):
    code, out, _ = run(capsys, "report", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert all(list(r) == list(COLUMNS) for r in rows)
    by_name = {r["quantity"]: r for r in rows}
    holo = by_name["holographic bound (de Sitter horizon)"]
    assert holo["published_value"] == 1e122 and abs(holo["log10_ratio"]) <= 1
    spec = by_name["specifiability limit for 1e122 bits"]
    assert spec["computed_value"] == 405 and spec["published_value"] == 400
    assert {r["status"] for r in rows} <= {"pass", "flagged", "info"}


def test_report_text_and_json_agree(capsys):
    _, js, _ = run(capsys, "report", "--format", "json")
    _, txt, _ = run(capsys, "report")
    rows = json.loads(js)
    table = txt.split("\n\nprovenance:")[0].splitlines()[2:]
    assert len(table) == len(rows)
    for line, r in zip(table, rows):
        assert line.startswith(r["quantity"])
        rest = line[len(r["quantity"]):].split()
        nums = rest[:5]
        for tok, key in zip(nums, ("published_value", "computed_value", "log10_computed", "log10_ratio", "tolerance_log10")):
            if r[key] is None:
                assert tok == "-"
            else:
                assert float(tok) == r[key]
        assert rest[5] == r["status"]


def test_report_tolerance_failure_exit_3(capsys, tmp_path):
    cfg = tmp_path / "bad.conf"
    cfg.write_text("dark_energy_density = 1e-30\n")
    code, out, _ = run(capsys, "--config", str(cfg), "report")
    assert code == 3
    assert "fail" in out


def test_exit_codes(capsys, tmp_path):
    assert run(capsys, "nosuch")[0] == 1
    assert run(capsys, "cosmo", "--a", "x")[0] == 1
    assert run(capsys, "cosmo", "--a", "0")[0] == 1
    assert run(capsys, "--config", str(tmp_path / "missing.conf"), "cosmo")[0] == 1
    bad = tmp_path / "bad.conf"
    bad.write_text("omega_m = -1\n")
    code, _, err = run(capsys, "--config", str(bad), "cosmo")
    assert code == 1 and "omega_m" in err
    closed = tmp_path / "closed.conf"
    closed.write_text("omega_m = 0\nomega_r = 0\nomega_lambda = 2\n")
    assert run(capsys, "--config", str(closed), "cosmo")[0] == 2


def test_config_format_default(capsys, tmp_path):
    cfg = tmp_path / "j.conf"
    cfg.write_text("format = json\n")
    _, out, _ = run(capsys, "--config", str(cfg), "cosmo")
    json.loads(out)


@pytest.mark.parametrize(
    "argv",
    [
        ["report"],
        ["qubit", "--n", "5", "--depth", "4", "--trials", "3", "--seed", "11"],
        ["vacuum", "--format", "json", "--n-max", "8"],
    ],
)
def test_byte_identical_reruns(argv):
    a, b = run_proc(*argv), run_proc(*argv)
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout and a.stdout


def test_qubit_files_byte_identical(tmp_path):
    paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
    for p in paths:
        run_proc("qubit", "--n", "5", "--depth", "4", "--trials", "3", "--seed", "3", "--out", str(p))
    assert paths[0].read_bytes() == paths[1].read_bytes()
