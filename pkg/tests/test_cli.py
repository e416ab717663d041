"""Command-line interface: every subcommand end to end."""

import json

import pytest

from repdyn.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_classes_lists_canonical_words(capsys):
    code, out, _ = run(capsys, "classes", "3")
    assert code == 0
    assert out == "LLL\nLLR\n"


def test_phi_default_and_specialized(capsys):
    code, out, _ = run(capsys, "phi", "LL")
    assert code == 0
    assert out.strip() == "c^2*x^2 + c*d*y^2 + c*x + 1"

    code, out, _ = run(capsys, "phi", "LR", "--side", "R", "--spec", "1", "6")
    assert code == 0
    assert out.splitlines()[0] == "x^4 + 12*x^2*y^2 + 36*y^4 + 6*y^2 - y"

    code, out, _ = run(capsys, "phi", "LLLLL", "--side", "R")
    assert code == 0
    assert out.strip() == "0"


def test_table1_emits_the_full_degree_table(capsys):
    code, out, _ = run(capsys, "table1")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "type,univariate,degL,degR"
    assert len(lines) == 14  # header + 13 classes
    assert lines[-1].startswith("LLRLR,")


def test_classify_period_one(capsys):
    code, out, _ = run(capsys, "classify", "--period", "1", "--C", "1", "--D", "-2")
    assert code == 0
    assert "trivial fixed vector: (0, 0)" in out
    assert "parametrized family" in out
    assert "(2, 1)" in out  # the small Pell-derived fixed vector
    assert "integral fixed vectors" in out


def test_classify_period_two(capsys):
    code, out, _ = run(capsys, "classify", "--period", "2", "--C", "1", "--D", "-1")
    assert code == 0
    assert "vector (0, 1)  [verified LL]" in out
    assert "vector (-1, 1)  [verified LL]" in out


def test_classify_period_three_parses_negative_rationals(capsys):
    code, out, _ = run(capsys, "classify", "--period", "3", "--C", "1", "--D", "-29/16")
    assert code == 0
    for vec in ("(-7/4, 1)", "(5/4, 1)", "(-1/4, 1)"):
        assert f"vector {vec}  [verified LLL]" in out


def test_classify_period_four(capsys):
    code, out, _ = run(capsys, "classify", "--period", "4", "--C", "1", "--D", "6")
    assert code == 0
    assert "factor shape: (2, 2)" in out
    assert out.count("[verified]") == 2
    assert "y^2 + 1/3*y + 7/135" in out
    assert "y^2 + 1/4*y + 5/128" in out


def test_classify_period_five(capsys):
    code, out, _ = run(capsys, "classify", "--period", "5", "--C", "-2", "--D", "2")
    assert code == 0
    assert "degree: 7" in out
    assert "rational roots: ['-1/2']" in out
    assert "rational vector (-1/2, -1/2)  [verified]" in out


def test_classify_unsupported_period(capsys):
    code, _, err = run(capsys, "classify", "--period", "6", "--C", "1", "--D", "2")
    assert code == 2
    assert err.startswith("error:")


def test_pell_prints_the_fundamental_solution(capsys):
    code, out, _ = run(capsys, "pell", "8")
    assert code == 0
    assert out.strip() == "X=3 Y=1"


def test_pell_rejects_square_parameters(capsys):
    code, _, err = run(capsys, "pell", "9")
    assert code == 2
    assert err.startswith("error:")


def test_sweep_streams_records_and_summary(capsys):
    code, out, err = run(capsys, "sweep", "--target", "lrlr-rational", "--height", "3")
    assert code == 0
    records = [json.loads(line) for line in out.strip().splitlines()]
    assert len(records) == 48
    assert records[0]["finding"]["kind"] in ("NoRationalRoot", "FactorShape")
    summary = json.loads(err)
    assert summary["cells_total"] == 182
    assert summary["findings"] == {"NoRationalRoot": 24, "FactorShape": 24}
    assert summary["records_written"] == 48


def test_sweep_writes_records_to_a_file(capsys, tmp_path):
    out_path = tmp_path / "records.jsonl"
    code, out, _ = run(
        capsys,
        "sweep", "--target", "lrlr-rational", "--height", "3",
        "--output", str(out_path),
    )
    assert code == 0
    summary = json.loads(out)
    assert summary["output_path"] == str(out_path)
    lines = out_path.read_text().strip().splitlines()
    assert len(lines) == summary["records_written"] == 48


def test_sweep_checkpoint_resume_via_cli(capsys, tmp_path):
    args = (
        "sweep", "--target", "lrlr-rational", "--height", "3",
        "--output", str(tmp_path / "r.jsonl"),
        "--checkpoint", str(tmp_path / "c.ckpt"),
    )
    code, out, _ = run(capsys, *args)
    assert code == 0
    assert json.loads(out)["resumed"] is False
    code, out, _ = run(capsys, *args)
    assert code == 0
    assert json.loads(out)["resumed"] is True


def test_sweep_rejects_unknown_targets(capsys):
    code, _, err = run(capsys, "sweep", "--target", "bogus", "--height", "3")
    assert code == 2
    assert "unknown sweep target" in err


def test_quartic_analysis_full_report(capsys):
    code, out, _ = run(capsys, "quartic-analysis", "--surface-height", "4")
    assert code == 0
    assert "reduction identity (u = y + shift): ok" in out
    assert out.count("NoPoints over Q_3") == 4
    assert "stored curve divides the resultant: False" in out
    assert "equality case closed: yes" in out
    assert "shape (2,2) iff" in out
    assert "rational (C, D, z, n) hits up to height 4: none" in out


def test_verify_examples_battery(capsys):
    code, out, _ = run(capsys, "verify-examples")
    assert code == 0
    assert out.count("PASS") == 8
    assert "FAIL" not in out
    assert out.strip().endswith("8/8 examples verified")


def test_graph_writes_dot_output(capsys, tmp_path):
    dot_path = tmp_path / "orbit.dot"
    code, out, _ = run(
        capsys,
        "graph", "--C", "1", "--D", "-1", "--x", "0", "--y", "1",
        "--dot", str(dot_path),
    )
    assert code == 0
    assert "vertices=7 edges=14 truncated=False" in out
    text = dot_path.read_text()
    assert text.startswith("digraph orbit {")
    assert 'label="(0, 1)"' in text


def test_help_smoke(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--help"])
    assert exc.value.code == 0
    out = capsys.readouterr().out
    for sub in ("classes", "phi", "table1", "classify", "pell", "sweep",
                "quartic-analysis", "verify-examples", "graph"):
        assert sub in out
