from __future__ import annotations

import csv
import io
import json
import math

import pytest

from poscasimir import cli
from poscasimir.cli import EXIT_NUMERIC, EXIT_OK, EXIT_USAGE, EXIT_VERIFY, CliConfig, UsageError, main


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch):
    # --weyl-cap writes the environment; setenv makes monkeypatch restore it
    monkeypatch.setenv("CASIMIR_WEYL_CAP", "")
    monkeypatch.delenv("CASIMIR_WEYL_CAP")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_roots_g2(capsys):
    code, out, _ = run(capsys, "roots", "G2")
    assert code == EXIT_OK
    assert "positive_roots 6" in out and "dims 14 7" in out
    code, out, _ = run(capsys, "roots", "G2", "--json")
    data = json.loads(out)
    assert data["bourbaki"] == {"1": 2, "2": 1} and data["short"] == [2]


def test_roots_inadmissible(capsys):
    code, _, err = run(capsys, "roots", "D3")
    assert code == EXIT_USAGE and "error" in err


def test_character_a1(capsys):
    code, out, _ = run(capsys, "character", "A1", "--t", "0.5")
    assert code == EXIT_OK
    assert float(out.split()[0]) == pytest.approx(2 * math.cosh(math.pi), rel=1e-15)


def test_character_oracle(capsys):
    code, out, _ = run(capsys, "character", "B2", "--t", "0.2", "0.3", "--oracle")
    lines = out.splitlines()
    assert code == EXIT_OK and len(lines) == 3
    assert float(lines[2].split()[1]) < 1e-9


def test_character_errors(capsys):
    assert run(capsys, "character", "A2", "--t", "0.1")[0] == EXIT_USAGE
    assert run(capsys, "character", "F4", "--t", "4", "4", "4", "4")[0] == EXIT_NUMERIC
    assert run(capsys, "character", "B2", "--t", "0", "0.4", "--oracle")[0] == EXIT_NUMERIC


def test_argparse_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["character", "A1"])
    assert exc.value.code == EXIT_USAGE
    with pytest.raises(SystemExit):
        main(["virtual", "A2", "--b", "0.5", "--lambda", "1", "1", "--t", "1"])


def test_cli_config_validation():
    with pytest.raises(UsageError):
        CliConfig("A1", t=(1.0,), lam=(1.0,), b=0.5)
    with pytest.raises(UsageError):
        CliConfig("A1", lam=(1.0,))


def test_verify_writes_json(capsys, tmp_path):
    target = tmp_path / "b2.json"
    code, _, _ = run(capsys, "verify", "B2", "-o", str(target))
    assert code == EXIT_OK
    assert json.loads(target.read_text())["summary"]["passed"]


def test_verify_failure_exit(capsys, monkeypatch):
    def failing(names, seed=0):
        return {"schema": 1, "types": {}, "summary": {"passed": False}}
    monkeypatch.setattr(cli, "verify_many", failing)
    assert run(capsys, "verify", "A1")[0] == EXIT_VERIFY


def test_region_csv_stdout(capsys):
    code, out, _ = run(capsys, "region", "A2", "--steps", "3")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == EXIT_OK and len(rows) == 10 and rows[0][0] == "t_1"


def test_region_outputs(capsys, tmp_path):
    svg, js, fig = tmp_path / "b2.svg", tmp_path / "b2.json", tmp_path / "b2.png"
    code, _, _ = run(capsys, "region", "B2", "--steps", "20", "--face", "1",
                     "--svg", str(svg), "--json", str(js), "--figure", str(fig))
    assert code == EXIT_OK
    assert 'data-x="4" data-y="5"' in svg.read_text()
    assert len(json.loads(js.read_text())) == 20
    assert fig.stat().st_size > 1000


def test_region_usage_errors(capsys):
    assert run(capsys, "region", "A3", "--svg", "-")[0] == EXIT_USAGE
    assert run(capsys, "region", "A2", "--face", "7")[0] == EXIT_USAGE
    assert run(capsys, "region", "A2", "--face", "x")[0] == EXIT_USAGE
    assert run(capsys, "region", "A2", "--csv", "-", "--json", "-")[0] == EXIT_USAGE
    assert run(capsys, "region", "A2", "--range", "0", "9")[0] == EXIT_NUMERIC


def test_virtual(capsys):
    code, out, _ = run(capsys, "virtual", "A2", "--b", "0.6", "--lambda", "0.3", "0.9")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "word 1 2 1"
    assert sum(line.startswith("K_") for line in out.splitlines()) == 2
    code, out2, _ = run(capsys, "virtual", "A2", "--b", "0.6", "--lambda", "0.3", "0.9",
                        "--word", "2", "1", "2")
    k = [line for line in out.splitlines() if line.startswith("K_")]
    k2 = [line for line in out2.splitlines() if line.startswith("K_")]
    assert code == EXIT_OK and k == k2
    assert run(capsys, "virtual", "A2", "--b", "0.6", "--lambda", "1", "1",
               "--word", "1", "1", "2")[0] == EXIT_USAGE
    assert run(capsys, "virtual", "A2", "--b", "1.5", "--lambda", "1", "1")[0] == EXIT_USAGE


def test_weyl_cap_flag(capsys):
    code, out, _ = run(capsys, "--weyl-cap", "10", "verify", "B3")
    assert code == EXIT_VERIFY
    assert json.loads(out)["summary"]["hard_failures"] == ["B3:weyl_invariance"]


def test_report(capsys, tmp_path):
    code, out, _ = run(capsys, "report", "B2", "--out", str(tmp_path), "--steps", "15")
    assert code == EXIT_OK
    names = sorted(p.name for p in tmp_path.iterdir())
    assert names == ["B2_boundary.csv", "B2_boundary.svg", "B2_cusp.png", "B2_region.csv",
                     "B2_region.png", "B2_verify.json"]
    assert len(out.splitlines()) == 6
    code, _, _ = run(capsys, "report", "A3", "--out", str(tmp_path / "a3"), "--steps", "4")
    assert code == EXIT_OK and len(list((tmp_path / "a3").iterdir())) == 3
