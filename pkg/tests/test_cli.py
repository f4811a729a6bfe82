import json

import numpy as np
import pytest

from unitary_bounds import errors
from unitary_bounds.cli import main, parse_dims, parse_grid, parse_theta
from unitary_bounds.fileio import format_matrix, format_state
from unitary_bounds.scenarios import clock_shift, scenario_state
from unitary_bounds.sweeps import SweepResult


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def json_lines(text):
    return {r["quantity"]: r["value"] for r in map(json.loads, text.splitlines())}


@pytest.mark.parametrize(
    "text, value",
    [("1.0", 1.0), ("pi", np.pi), ("pi/4", np.pi / 4), ("-3pi/2", -1.5 * np.pi), ("0.5*pi", np.pi / 2)],
)
def test_parse_theta(text, value):
    assert parse_theta(text) == pytest.approx(value)


def test_parse_grid():
    assert parse_grid(None, None) is None
    assert parse_grid("0:2pi:0.01", None).size == 629
    g = parse_grid("4:4.6", 200)
    assert g.size == 200 and g[0] == 4.0 and g[-1] == 4.6


def test_eval_example1(capsys):
    code, out, _ = run(capsys, "eval", "--scenario", "ex1", "--theta", "pi/4", "--bounds", "I1',I2", "--format", "json-lines")
    assert code == 0
    vals = json_lines(out)
    assert vals["product"] == pytest.approx(0.5625, abs=1e-12)
    assert vals["I1prime"] == pytest.approx(0.515625, abs=1e-12)
    assert vals["I2"] == pytest.approx(0.375, abs=1e-12)


def test_eval_text_and_triple(capsys):
    code, out, _ = run(capsys, "eval", "--scenario", "ex4", "--theta", "1.0")
    assert code == 0
    assert "M121" in out and "axis" in out and "yu_d2" in out


def test_eval_files_identity_operator(capsys, tmp_path):
    state = tmp_path / "s.txt"
    state.write_text(format_state(scenario_state("ex1", 0.7)))
    ops = tmp_path / "ops.txt"
    ops.write_text(format_matrix(np.eye(3)) + format_matrix(clock_shift(3)[1]))
    code, out, _ = run(capsys, "eval", "--state", str(state), "--ops", str(ops), "--bounds", "I1',I2,S32", "--format", "csv")
    assert code == 0
    rows = dict(line.split(",") for line in out.splitlines()[1:])
    assert all(float(rows[k]) == 0.0 for k in ("product", "I1prime", "I2", "S32"))


def test_eval_error_codes(capsys, tmp_path):
    state = tmp_path / "s.txt"
    state.write_text(format_state(scenario_state("ex1", 0.7)))
    bad = tmp_path / "bad.txt"
    bad.write_text(format_matrix(np.diag([1, 2, 1])) + format_matrix(np.eye(3)))
    assert run(capsys, "eval", "--state", str(state), "--ops", str(bad))[0] == 3
    garbled = tmp_path / "garbled.txt"
    garbled.write_text("dim 3 matrix\n1 0\n")
    assert run(capsys, "eval", "--state", str(state), "--ops", str(garbled))[0] == 2
    small = tmp_path / "small.txt"
    small.write_text(format_matrix(np.eye(2)) + format_matrix(np.eye(2)))
    assert run(capsys, "eval", "--state", str(state), "--ops", str(small))[0] == 2
    assert run(capsys, "eval", "--scenario", "ex1", "--bounds", "Q7")[0] == 2


def test_verify_random(capsys):
    code, out, _ = run(capsys, "verify", "--random", "--dims", "5", "--trials", "30", "--seed", "42")
    assert code == 0 and out.strip().endswith("verify: PASS")


def test_verify_scenario(capsys):
    code, out, _ = run(capsys, "verify", "--scenario", "ex3:4", "--num", "40", "--grid", "0:2pi")
    assert code == 0


def test_verify_zero_tol_fails(capsys, tmp_path):
    out_file = tmp_path / "fail.jsonl"
    code, out, _ = run(capsys, "verify", "--random", "--dims", "4", "--trials", "10", "--tol", "0", "--out", str(out_file))
    assert code == 4
    assert out_file.read_text()


def test_sweep_writes_csv_and_script(capsys, tmp_path):
    out = tmp_path / "fig1.csv"
    code, _, err = run(capsys, "sweep", "fig1", "--out", str(out))
    assert code == 0
    res = SweepResult.from_csv(out.read_text())
    assert res.grid.size == 629
    assert res.columns["diff_I1prime_minus_I2"].min() >= -1e-12
    assert (tmp_path / "fig1.gp").read_text().count("fig1.csv") >= 1
    assert "finding" not in err


def test_sweep_stdout_identical(capsys):
    _, a, _ = run(capsys, "sweep", "fig2", "--grid", "4:4.6", "--num", "20")
    _, b, _ = run(capsys, "sweep", "fig2", "--grid", "4:4.6", "--num", "20")
    assert a == b and a.startswith("theta,product,I2,I1prime")


def test_sweep_unwritable(capsys, tmp_path):
    code, _, _ = run(capsys, "sweep", "fig1", "--out", str(tmp_path / "missing" / "x.csv"))
    assert code == 5


def test_permmax(capsys):
    code, out, _ = run(capsys, "permmax", "--scenario", "ex1", "--theta", "pi/4", "--bound", "I1'", "--format", "json-lines")
    rec = json.loads(out)
    assert code == 0 and rec["improvement"] >= 0 and rec["evaluations"] == 36
    code, out, _ = run(capsys, "permmax", "--scenario", "ex4", "--theta", "1.0", "--bound", "M(1,2,1)", "--format", "json-lines")
    rec = json.loads(out)
    assert rec["evaluations"] == 216 and rec["permutations"] == [[0, 2, 1], [2, 0, 1], [2, 0, 1]]


def test_permmax_cap_and_sampled(capsys):
    code, _, err = run(capsys, "permmax", "--scenario", "random:7", "--bound", "I1'")
    assert code == 3 and "sampled" in err
    code, out, _ = run(capsys, "permmax", "--scenario", "random:7", "--bound", "S(3,1)", "--strategy", "sampled", "--samples", "50", "--seed", "9")
    assert code == 0 and "improvement" in out


def test_parse_dims():
    assert parse_dims("2-4,6") == [2, 3, 4, 6]
    assert parse_dims("3") == [3]
    with pytest.raises(errors.FormatError):
        parse_dims("two")
