"""Height-bounded sweeps: sieve soundness, determinism, checkpoint recovery."""

import hashlib
import json
from fractions import Fraction

import pytest

from repdyn import harness
from repdyn.classify import r_poly
from repdyn.dynamics import Form, is_periodic_of_type
from repdyn.harness import (
    SweepCheckpointError,
    SweepConfig,
    SweepIOError,
    TARGETS,
    sweep,
    verify_examples,
)
from repdyn.polyring import quartic_factor_shape, rational_roots
from repdyn.rationals import enumerate_rationals

F = Fraction


def test_target_names_and_validation():
    assert TARGETS == ("lrlr-integer", "lrlr-rational", "llrlr-rational", "surface")
    with pytest.raises(ValueError):
        sweep(SweepConfig(target="nonsense", height_bound=3))
    with pytest.raises(ValueError):
        sweep(SweepConfig(target="surface", height_bound=0))


def test_sieve_rejections_are_proofs():
    """Exhaustive height-4 truth: no discarded cell hides a root or a split."""
    values = enumerate_rationals(4)
    units = {k: (want_shape, rootless) for k, _, _, want_shape, rootless in
             harness._survivor_units("lrlr-rational", values)}
    nv = len(values)
    for i in range(nv):
        for j in range(nv):
            if i == j:
                continue
            k = i * (nv - 1) + (j if j < i else j - 1)
            poly = r_poly(values[i], values[j])
            roots = rational_roots(poly)
            if roots:
                assert k in units and not units[k][1], (
                    f"cell ({values[i]}, {values[j]}) has roots {roots} "
                    "but the root sieve discarded it"
                )
            elif quartic_factor_shape(poly) == (2, 2):
                assert k in units and units[k][0], (
                    f"cell ({values[i]}, {values[j]}) splits (2, 2) "
                    "but the shape sieve discarded it"
                )


def test_small_rational_sweep_census():
    s = sweep(SweepConfig(target="lrlr-rational", height_bound=4))
    assert s.cells_total == 462
    assert s.cells_sieved_out + s.cells_checked == s.cells_total
    assert s.cells_checked == 88
    assert dict(s.findings) == {"NoRationalRoot": 48, "FactorShape": 40}
    assert s.records_written == len(s.records) == 88
    seqs = []
    for line in s.records:
        rec = json.loads(line)
        seqs.append(rec["seq"])
        finding = rec["finding"]
        assert finding["kind"] in ("NoRationalRoot", "FactorShape")
        if finding["kind"] == "FactorShape":
            assert finding["shape"] == [2, 2]
        C, D = F(rec["C"]), F(rec["D"])
        assert C != D
    assert seqs == list(range(88))


def test_llrlr_sweep_reports_the_opposite_diagonal_family():
    s = sweep(SweepConfig(target="llrlr-rational", height_bound=4))
    assert dict(s.findings) == {"RationalRoot": 22}
    assert s.cells_checked == 22
    word = ("L", "L", "R", "L", "R")
    for line in s.records:
        rec = json.loads(line)
        C, D = F(rec["C"]), F(rec["D"])
        assert D == -C, "every reported cell lies on the line D = -C"
        root = F(rec["finding"]["root"])
        assert root == 1 / C
        assert rec["finding"]["witness"]["verified"] is True
        # independent re-check straight through the dynamics
        assert is_periodic_of_type(Form(C, D), (1 / C, 1 / C), word)


def test_quiet_targets_write_no_records():
    surf = sweep(SweepConfig(target="surface", height_bound=8))
    assert surf.cells_checked == 0
    assert surf.records == []
    ints = sweep(SweepConfig(target="lrlr-integer", height_bound=40))
    assert ints.cells_checked == 0
    assert ints.findings == {}


def test_worker_count_does_not_change_the_stream(tmp_path):
    outs = []
    for workers in (1, 2):
        path = tmp_path / f"w{workers}.jsonl"
        s = sweep(
            SweepConfig(
                target="lrlr-rational",
                height_bound=5,
                workers=workers,
                output_path=str(path),
            )
        )
        data = path.read_bytes()
        assert hashlib.sha256(data).hexdigest() == s.digest
        outs.append((data, s))
    assert outs[0][0] == outs[1][0], "record streams differ between worker counts"
    assert outs[0][1].digest == outs[1][1].digest
    assert dict(outs[0][1].findings) == dict(outs[1][1].findings)
    assert outs[1][1].workers == 2


def test_workers_env_override(monkeypatch):
    monkeypatch.setenv("REPDYN_WORKERS", "2")
    s = sweep(SweepConfig(target="lrlr-rational", height_bound=3))
    assert s.workers == 2


def _checkpointed_config(tmp_path, height=5):
    return SweepConfig(
        target="lrlr-rational",
        height_bound=height,
        output_path=str(tmp_path / "records.jsonl"),
        checkpoint_path=str(tmp_path / "sweep.ckpt"),
        checkpoint_every=1,
    )


def test_interrupted_sweep_resumes_byte_exactly(tmp_path, monkeypatch):
    reference = sweep(
        SweepConfig(
            target="lrlr-rational",
            height_bound=5,
            output_path=str(tmp_path / "reference.jsonl"),
        )
    )
    ref_bytes = (tmp_path / "reference.jsonl").read_bytes()

    config = _checkpointed_config(tmp_path)
    real_write = harness._RecordStream.write
    calls = {"done": 0}

    def interrupting(self, record):
        if calls["done"] >= 2:
            raise KeyboardInterrupt
        calls["done"] += 1
        return real_write(self, record)

    monkeypatch.setattr(harness._RecordStream, "write", interrupting)
    with pytest.raises(KeyboardInterrupt):
        sweep(config)
    monkeypatch.setattr(harness._RecordStream, "write", real_write)

    partial = (tmp_path / "records.jsonl").read_bytes()
    assert partial and ref_bytes.startswith(partial)

    resumed = sweep(config)
    assert resumed.resumed is True
    assert (tmp_path / "records.jsonl").read_bytes() == ref_bytes
    assert resumed.digest == reference.digest
    assert dict(resumed.findings) == dict(reference.findings)


def test_finished_sweep_resumes_to_the_same_state(tmp_path):
    config = _checkpointed_config(tmp_path)
    first = sweep(config)
    data = (tmp_path / "records.jsonl").read_bytes()
    again = sweep(config)
    assert again.resumed is True
    assert again.digest == first.digest
    assert (tmp_path / "records.jsonl").read_bytes() == data


def test_corrupted_checkpoint_is_refused(tmp_path):
    config = _checkpointed_config(tmp_path)
    sweep(config)
    (tmp_path / "sweep.ckpt").write_text("{not json")
    with pytest.raises(SweepCheckpointError, match="delete the checkpoint"):
        sweep(config)


def test_checkpoint_from_another_sweep_is_refused(tmp_path):
    sweep(_checkpointed_config(tmp_path, height=4))
    with pytest.raises(SweepCheckpointError, match="different sweep"):
        sweep(_checkpointed_config(tmp_path, height=5))


def test_checkpoint_without_its_output_is_refused(tmp_path):
    config = _checkpointed_config(tmp_path)
    sweep(config)
    (tmp_path / "records.jsonl").unlink()
    with pytest.raises(SweepCheckpointError, match="missing output"):
        sweep(config)


def test_truncated_output_is_refused(tmp_path):
    config = _checkpointed_config(tmp_path)
    sweep(config)
    path = tmp_path / "records.jsonl"
    lines = path.read_bytes().splitlines(keepends=True)
    path.write_bytes(b"".join(lines[:-1]))  # drop a committed record
    with pytest.raises(SweepCheckpointError, match="checkpoint expects"):
        sweep(config)


def test_corrupted_output_bytes_are_refused(tmp_path):
    config = _checkpointed_config(tmp_path)
    sweep(config)
    path = tmp_path / "records.jsonl"
    data = path.read_bytes()
    path.write_bytes(b"X" + data[1:])  # same line count, different content
    with pytest.raises(SweepCheckpointError, match="digest"):
        sweep(config)


def test_unwritable_output_path_fails_fast(tmp_path):
    config = SweepConfig(
        target="lrlr-rational",
        height_bound=3,
        output_path=str(tmp_path / "no-such-dir" / "records.jsonl"),
    )
    with pytest.raises(SweepIOError):
        sweep(config)


def test_worked_example_battery_all_green():
    checks = verify_examples()
    assert len(checks) == 8
    assert all(check.ok for check in checks), [
        (check.name, check.detail) for check in checks if not check.ok
    ]
    assert {check.name for check in checks} == {
        "period4-integer-example",
        "period4-rational-example",
        "period5-product-example",
        "period5-degenerate-rejection",
        "degree-table",
        "left-square-modular-poly",
        "square-root-obstruction",
        "equality-curve-local",
    }
