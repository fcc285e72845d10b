import json
import subprocess
import sys

import pytest

from kneser_tverberg.cli import main
from kneser_tverberg.experiments import ExperimentReport


def run_cli(*argv):
    return subprocess.run(
        [sys.executable, "-m", "kneser_tverberg", *argv],
        capture_output=True,
        text=True,
    )


def test_module_entry_point():
    proc = run_cli("chi", "--subsets", "2", "--ground", "5")
    assert proc.returncode == 0
    data = json.loads(proc.stdout)
    assert data["chi"] == 3
    assert data["n_vertices"] == 10


def test_verify_exit_zero_on_match():
    proc = run_cli("verify", "kneser", "2", "5")
    assert proc.returncode == 0
    data = json.loads(proc.stdout)
    assert data["verdict"] == "match"
    assert data["experiment"].startswith("kneser")


def test_bad_instance_params_exit_two():
    proc = run_cli("verify", "kneser", "2", "5", "9")
    assert proc.returncode == 2
    assert "parameter" in proc.stderr


def test_unknown_subcommand_exit_two():
    proc = run_cli("frobnicate")
    assert proc.returncode == 2


def test_complex_subcommand(capsys):
    code = main(["complex", "--forbidden", "1,3 2,4", "--ground", "4"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data["n"] == 4
    assert sorted(map(sorted, data["minimal_nonfaces"])) == [[1, 3], [2, 4]]


def test_complex_requires_one_source(capsys):
    code = main(["complex", "--simplex", "3", "--facets", "1,2", "--ground", "3"])
    assert code == 2


def test_kneser_subcommand(capsys):
    code = main(["kneser", "--subsets", "2", "--ground", "5"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data["n_vertices"] == 10 and data["n_edges"] == 15


def test_kneser_stable_subcommand(capsys):
    code = main(["kneser", "--subsets", "2", "--ground", "5", "--stable", "2"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data["n_vertices"] == 5 and data["n_edges"] == 5


def test_bounds_subcommand(capsys):
    code = main(["bounds", "--simplex", "5", "--skeleton", "0", "-r", "3", "-d", "1"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data["width"] == 3
    assert data["kriz"] == "3/2"
    assert data["kriz_ceiling"] == 2
    assert data["floor_formula"] == 1


def test_bounds_greedy_flag(capsys):
    code = main(["bounds", "--simplex", "5", "--skeleton", "0", "-r", "2", "--greedy"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data["greedy_proper"] is True


def test_gale_oracle_agreement(capsys):
    code = main(["gale", "-n", "6", "-d", "2", "--oracle"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data["oracle_agrees"] is True
    assert len(data["facets"]) == 6


def test_tverberg_moment_certificate(capsys):
    code = main(["tverberg", "--moment", "1,2,3,4,5", "-d", "1", "-r", "3"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data["verified"] is True
    assert data["parts"] == [[1, 4], [2, 5], [3]]


def test_tverberg_absence(capsys):
    code = main(["tverberg", "--points", "0,0;1,0;0,1"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data["found"] is False


def test_tverberg_restricted(capsys):
    code = main(
        [
            "tverberg",
            "--points",
            "2,0;1,2;-1,2;-2,0;-1,-2;1,-2;0,0",
            "--facets",
            "1,2 2,3 3,4 4,5 5,6 1,6",
            "--ground",
            "6",
            "--cone",
        ]
    )
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data["found"] is False and data["restricted"] is True


def test_tverberg_sgp_report(capsys):
    code = main(["tverberg", "--sgp", "--moment", "1,2,3,4,5,6", "-d", "4"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data["strong_general_position"] is False
    assert data["violating_tuple"] == [[1, 6], [2, 3, 4, 5]]


def test_tverberg_cap_refusal(capsys):
    code = main(
        ["tverberg", "--moment", ",".join(map(str, range(1, 13))), "-d", "2", "-r", "3", "--cap", "10"]
    )
    assert code == 2
    assert "cap" in capsys.readouterr().err


def test_table_format(capsys):
    code = main(["chi", "--subsets", "2", "--ground", "5", "--table"])
    assert code == 0
    out = capsys.readouterr().out
    assert not out.lstrip().startswith("{")
    assert "chi" in out


def test_verify_all_rejects_params(capsys):
    assert main(["verify", "all", "3"]) == 2


def test_verify_mismatch_exit_one(monkeypatch, capsys):
    stub = ExperimentReport(
        "kneser-stub", {}, {"chi": 99}, {"chi": 3}, "mismatch", 0.0
    )
    monkeypatch.setattr(
        "kneser_tverberg.experiments.verify_kneser", lambda *a, **kw: stub
    )
    code = main(["verify", "kneser", "2", "5"])
    assert code == 1
    data = json.loads(capsys.readouterr().out)
    assert data["verdict"] == "mismatch"


def test_verify_mismatch_table_shows_diff(monkeypatch, capsys):
    stub = ExperimentReport(
        "kneser-stub", {}, {"chi": 99}, {"chi": 3}, "mismatch", 0.0
    )
    monkeypatch.setattr(
        "kneser_tverberg.experiments.verify_kneser", lambda *a, **kw: stub
    )
    code = main(["verify", "kneser", "2", "5", "--table"])
    assert code == 1
    out = capsys.readouterr().out
    assert "claimed chi=99" in out


def test_verify_jobs_do_not_change_output(capsys):
    def reports(jobs):
        assert main(["verify", "stable-faces", "--jobs", jobs]) == 0
        lines = capsys.readouterr().out.splitlines()
        out = []
        for line in lines:
            d = json.loads(line)
            d.pop("runtime_s", None)
            out.append(d)
        return out

    assert reports("1") == reports("4")
