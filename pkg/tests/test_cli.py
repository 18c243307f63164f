import csv
import json
from lowrank_strang.exceptions import NonlinearityBlowUpError
from lowrank_strang.harness import cli
from lowrank_strang.harness.cli import main


def test_help(capsys):
    """Tests that help exits successfully"""
    assert main(["--help"]) == 0
    assert "converge" in capsys.readouterr().out


def test_configuration_errors(tmp_path):
    """Tests that invalid settings exit with code 2"""
    out = str(tmp_path / "sv.csv")

    assert main(["svdump", "--problem", "wave", "--out", out]) == 2
    assert main(["svdump", "--problem", "lyap-random", "--m", "8", "--out", out]) == 2
    assert main(["svdump", "--problem", "heat", "--m", "16", "--k", "0", "--out", out]) == 2
    assert main(["converge", "--problem", "heat", "--taus", "a,b", "--out", out]) == 2
    assert main(
        ["converge", "--problem", "heat", "--m", "16", "--taus", "0.1", "--out", out]
    ) == 2


def test_divergence_exit_code(tmp_path, monkeypatch):
    """Tests that a diverged integration exits with code 3"""

    def diverge(*args, **kwargs):
        raise NonlinearityBlowUpError(0.5)

    monkeypatch.setattr(cli, "singular_value_dump", diverge)
    assert main(["svdump", "--problem", "heat", "--out", str(tmp_path / "sv.csv")]) == 3


def test_converge(tmp_path):
    """Tests a convergence sweep with its CSV and manifest"""
    out = tmp_path / "out"
    code = main(
        [
            "converge",
            "--problem", "heat",
            "--m", "16",
            "--T", "0.02",
            "--taus", "0.01,0.005,0.0025",
            "--ranks", "4",
            "--tau-ref", "0.001",
            "--workers", "2",
            "--checkpoints", str(tmp_path / "checkpoints"),
            "--out", str(out),
        ]
    )
    assert code == 0

    with open(out / "heat_convergence.csv", newline="") as f:
        rows = list(csv.reader(f))
    assert rows[0] == [
        "problem", "m", "scheme", "tau", "rank_or_theta", "error", "order", "runtime_ms", "seed"
    ]
    assert [row[3] for row in rows[1:]] == ["0.01", "0.005", "0.0025"]
    assert all(row[4] == "r=4" and float(row[5]) >= 0 for row in rows[1:])
    assert rows[1][6] == "" and rows[3][6] != ""

    manifest = json.loads((out / "manifest.json").read_text())
    assert manifest["command"] == "converge"
    assert manifest["settings"]["taus"] == [0.01, 0.005, 0.0025]
    assert len(manifest["cells"]) == 3
    assert manifest["config"]["harness"]["csv_columns"] == rows[0]
    assert "numpy" in manifest["versions"]


def test_svdump(tmp_path):
    """Tests the singular value dump and its manifest"""
    out = tmp_path / "sv.csv"
    code = main(
        [
            "svdump",
            "--problem", "cubic",
            "--m", "15",
            "--T", "0.02",
            "--tau", "0.01",
            "--k", "3",
            "--out", str(out),
        ]
    )
    assert code == 0
    assert out.read_text().splitlines()[0] == "index,sigma"

    manifest = json.loads((tmp_path / "sv.csv.manifest.json").read_text())
    assert manifest["command"] == "svdump"
    assert len(manifest["singular_values"]) == 3


def test_adaptive(tmp_path):
    """Tests the rank adaptive run"""
    out = tmp_path / "ranks.csv"
    code = main(
        [
            "adaptive",
            "--problem", "heat",
            "--m", "16",
            "--T", "0.03",
            "--tau", "0.01",
            "--theta", "1e-6",
            "--rank", "2",
            "--out", str(out),
        ]
    )
    assert code == 0
    assert len(out.read_text().splitlines()) == 4
    assert json.loads((tmp_path / "ranks.csv.manifest.json").read_text())["max_rank"] >= 1


def test_reference(tmp_path, capsys):
    """Tests that a second reference request is served from the checkpoint"""
    argv = [
        "reference",
        "--problem", "heat",
        "--m", "16",
        "--T", "0.01",
        "--tau-ref", "0.001",
        "--out", str(tmp_path),
    ]
    assert main(argv) == 0
    assert "(computed)" in capsys.readouterr().out
    assert main(argv) == 0
    assert "(cached)" in capsys.readouterr().out
    assert json.loads((tmp_path / "manifest.json").read_text())["cache_hit"]


def test_run(tmp_path):
    """Tests running a command described by a JSON file"""
    out = tmp_path / "sv.csv"
    settings = tmp_path / "run.json"
    settings.write_text(
        json.dumps(
            {
                "command": "svdump",
                "problem": "heat",
                "m": 16,
                "T": 0.02,
                "tau": 0.01,
                "k": 2,
                "out": str(out),
            }
        )
    )
    assert main(["run", "--config", str(settings)]) == 0
    assert len(out.read_text().splitlines()) == 3


def test_run_invalid(tmp_path):
    """Tests that unreadable run files are configuration errors"""
    settings = tmp_path / "run.json"
    settings.write_text("{not json")
    assert main(["run", "--config", str(settings)]) == 2

    settings.write_text(json.dumps({"command": "run", "config": "run.json"}))
    assert main(["run", "--config", str(settings)]) == 2
    assert main(["run", "--config", str(tmp_path / "missing.json")]) == 2
