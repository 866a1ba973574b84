"""Command line exit codes and JSON reports."""
import json

from typer.testing import CliRunner

from johnson_sep.cli import app

runner = CliRunner()


def test_verify_claim1_writes_json(tmp_path):
    out = tmp_path / "claim1.json"
    result = runner.invoke(app, ["verify-claim1", "--rank", "3", "--mod", "2", "--exp", "2", "--json", str(out)])
    assert result.exit_code == 0, result.output
    report = json.loads(out.read_text())
    assert report["status"] == "pass"
    assert report["outputs"]["h1_rank"] == 17
    assert "duration_seconds" not in report


def test_json_reports_are_byte_identical(tmp_path):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for path in paths:
        result = runner.invoke(app, ["deck", "--samples", "5", "--json", str(path)])
        assert result.exit_code == 0, result.output
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_failed_precondition_exits_one():
    result = runner.invoke(app, ["verify-claim1", "--exp", "1"])
    assert result.exit_code == 1


def test_non_positive_exponent_is_rejected():
    assert runner.invoke(app, ["verify-claim1", "--exp", "0"]).exit_code == 2
    assert runner.invoke(app, ["claim2", "--exp", "0"]).exit_code == 2


def test_johnson_depth_command():
    assert runner.invoke(app, ["johnson-depth", "--recipe", "phi(2)", "--expect", "1"]).exit_code == 0
    assert runner.invoke(app, ["johnson-depth", "--word", "a1 a2 A1 A2", "--expect", "1"]).exit_code == 0
    assert runner.invoke(app, ["johnson-depth", "--recipe", "R1_2", "--expect", "1"]).exit_code == 1


def test_bad_input_exits_two(tmp_path):
    assert runner.invoke(app, ["rho", "--recipe", "K1"]).exit_code == 2
    assert runner.invoke(app, ["johnson-depth", "--word", "a9"]).exit_code == 2
    assert runner.invoke(app, ["snf", "--matrix", "[[1, 2], [3]]"]).exit_code == 2
    assert runner.invoke(app, ["snf"]).exit_code == 2
    assert runner.invoke(app, ["orbit-index", "--c", "1,x"]).exit_code == 2
    missing = tmp_path / "missing.json"
    assert runner.invoke(app, ["rho", "--spec", str(missing)]).exit_code == 2


def test_rho_and_snf_commands():
    assert runner.invoke(app, ["rho", "--recipe", "K1_2"]).exit_code == 0
    assert runner.invoke(app, ["rho"]).exit_code == 0
    result = runner.invoke(app, ["snf", "--matrix", "[[2, 1], [0, 3]]", "-v"])
    assert result.exit_code == 0, result.output


def test_rho_with_spec_file(tmp_path):
    spec = tmp_path / "spec.json"
    spec.write_text(json.dumps({"rank": 2, "mod": 2}))
    out = tmp_path / "rho.json"
    result = runner.invoke(app, ["rho", "--spec", str(spec), "--recipe", "R1_2", "--json", str(out)])
    assert result.exit_code == 0, result.output
    assert json.loads(out.read_text())["outputs"]["h1_rank"] == 5


def test_orbit_index_command():
    result = runner.invoke(
        app, ["orbit-index", "--group", "sl", "--module", "hom", "--seed-kind", "tau-phi", "--size", "3"]
    )
    assert result.exit_code == 0, result.output


def test_congruence_scan_command():
    result = runner.invoke(app, ["congruence-scan", "--samples", "2", "--fold", "2"])
    assert result.exit_code == 0, result.output
    result = runner.invoke(app, ["congruence-scan", "--recipe", "phi(2)", "--expect-min", "1"])
    assert result.exit_code == 0, result.output


def test_push_act_command(tmp_path):
    data = tmp_path / "pushes.json"
    data.write_text(json.dumps([
        {"kind": "curve", "c": [0, 1, 0, 0, 0, 0], "d": [1, 0, 0, 0, 0, 0]},
        {"kind": "curve", "c": [0, 1, 0, 0, 0, 0], "d": [-1, 0, 0, 0, 0, 0]},
    ]))
    args = ["push-act", "--data", str(data), "--genus", "3"]
    assert runner.invoke(app, args + ["--expect-identity"]).exit_code == 0
    assert runner.invoke(app, args + ["--expect-nontrivial"]).exit_code == 1

    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps([{"kind": "point", "c": [1, 0], "d": [0, 1], "i_gamma": 2}]))
    assert runner.invoke(app, ["push-act", "--data", str(bad), "--genus", "1"]).exit_code == 2


def test_push_vanishing_and_frattini_commands():
    assert runner.invoke(app, ["push-vanishing-sweep", "--samples", "5"]).exit_code == 0
    assert runner.invoke(app, ["frattini-sweep", "--max-size", "2"]).exit_code == 0
    assert runner.invoke(app, ["claim2", "--exp", "1", "--exp", "2"]).exit_code == 0
