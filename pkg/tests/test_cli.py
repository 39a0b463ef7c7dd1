import csv
import json

import pytest

from gradedtoda.algebra import AlgebraSpec
from gradedtoda.cli import main, run


def _json(capsys):
    return json.loads(capsys.readouterr().out)


def test_verify_algebra(capsys):
    assert main(["verify-algebra"]) == 0
    assert _json(capsys)["status"] == "pass"


def test_broken_spec_names_the_triple(tmp_path, capsys):
    bad = AlgebraSpec.default().with_bracket("Z", "E+", [("D+", "3")])
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(bad.to_dict()))
    assert main(["verify-algebra", "--spec", str(path)]) == 1
    report = _json(capsys)
    jac = report["checks"][0]["checks"][0]
    assert jac["name"] == "jacobi" and jac["status"] == "fail"
    assert jac["details"]["failures"][0]["triple"] == ["Z", "E+", "E-"]


def test_usage_errors(capsys):
    assert main(["solve", "--no-such-flag"]) == 2
    assert main(["frobnicate"]) == 2
    assert main(["solve", "--model", "sinh2", "--boundary", "exact"]) == 2
    capsys.readouterr()


def test_solve_writes_csv(tmp_path, capsys):
    out = tmp_path / "grid.csv"
    assert main(["solve", "--model", "scalar-liouville", "--h", "0.015625", "--boundary", "exact",
                 "--out", str(out)]) == 0
    summary = _json(capsys)["checks"][0]["details"]
    assert float(summary["error"]) <= 1e-3
    rows = list(csv.reader(out.open()))
    assert rows[0] == ["z", "zbar", "phi"] and len(rows) == 65 * 65 + 1


def test_solve_from_boundary_file(tmp_path, capsys):
    data = {"edge_z": {"phi": [0.0] * 9}, "edge_zbar": {"phi": [0.0] * 9}}
    path = tmp_path / "edges.json"
    path.write_text(json.dumps(data))
    assert main(["solve", "--model", "free", "--h", "0.125", "--boundary", str(path)]) == 0
    assert float(_json(capsys)["checks"][0]["details"]["residual"]) == 0.0


def test_brackets_report(capsys):
    assert main(["brackets", "--sector", "virasoro"]) == 0
    report = _json(capsys)
    consts = report["checks"][0]["details"]["constants"]
    assert "a3 = 1/2" in consts


def test_reports_are_byte_stable(capsys):
    main(["solder"])
    first = capsys.readouterr().out
    main(["solder"])
    assert capsys.readouterr().out == first


def test_seed_from_environment(monkeypatch):
    monkeypatch.setenv("GRADEDTODA_SEED", "7")
    report, code = run(["solder", "--report", "/dev/null"])
    assert code == 0 and report.ok


@pytest.mark.parametrize("cmd", [["casimir"], ["affine-jacobi", "--max-mode", "2"], ["derive-eom", "--model", "sinh"]])
def test_other_subcommands(cmd, capsys):
    assert main(cmd) == 0
    capsys.readouterr()
