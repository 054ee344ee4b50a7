from pathlib import Path
from scripts.lsl import main
import json
import pytest


def test_trajectory_file(tmp_path: Path):
  out = tmp_path / "traj.csv"
  assert main(["trajectory", "--strategy", "algorithm-1", "--d", "1", "--rounds", "1", "--out", str(out)]) == 0
  assert out.read_text().splitlines() == ["t,x", "0,0", "4,4", "8,0"]


def test_algorithm2_trajectory_ignores_true_distance(tmp_path: Path):
  first = tmp_path / "a1.csv"
  second = tmp_path / "a2.csv"
  assert main(["trajectory", "--rounds", "3", "--out", str(first)]) == 0
  assert main(["trajectory", "--strategy", "alg2", "--d", "7", "--rounds", "3", "--out", str(second)]) == 0
  assert first.read_text() == second.read_text()


def test_trajectory_needs_a_round():
  with pytest.raises(SystemExit) as e:
    main(["trajectory", "--rounds", "0"])
  assert e.value.code == 2


def test_unwritable_path(tmp_path: Path):
  assert main(["trajectory", "--rounds", "1", "--out", str(tmp_path / "missing" / "traj.csv")]) == 2


def test_oracle_cross_check(capsys):
  assert main(["oracle", "--u", "4", "--d", "1", "--side", "1", "--rounds", "2", "--format", "json"]) == 0
  result = json.loads(capsys.readouterr().out)
  assert result["analytic_time"] == "36"
  assert float(result["oracle_time"]) == 36
  assert float(result["relative_discrepancy"]) < 1e-25


def test_oracle_standing_target(capsys):
  assert main(["oracle", "--u", "1"]) == 0
  assert "analytic time: 1\n" in capsys.readouterr().out


def test_oracle_not_caught(capsys):
  assert main(["oracle", "--u", "1000", "--side", "0", "--rounds", "1"]) == 1
  assert "raise --rounds" in capsys.readouterr().err


def test_oracle_unknown_distance_dominance(capsys):
  assert main(["oracle", "--strategy", "algorithm-2", "--u", "2", "--d", "2", "--format", "json"]) == 0
  near = float(json.loads(capsys.readouterr().out)["oracle_time"])
  assert main(["oracle", "--strategy", "algorithm-2", "--u", "4", "--d", "1", "--format", "json"]) == 0
  far = float(json.loads(capsys.readouterr().out)["oracle_time"])
  assert near <= far


def test_sweep_csv(capsys):
  assert main(["sweep", "--u-min", "1", "--u-max", "4", "--samples", "3", "--workers", "0"]) == 0
  lines = capsys.readouterr().out.splitlines()
  assert lines[0] == "u,d,side,catch_round,catch_time_log2,opt_time_log2,cr_log2,bound_F_log2,slack_log2"
  assert len(lines) == 7


def test_sweep_reference_columns(capsys):
  assert main(["sweep", "--u-min", "1", "--u-max", "4", "--samples", "2", "--workers", "0", "--reference", "--format", "json"]) == 0
  rows = json.loads(capsys.readouterr().out)
  assert len(rows) == 4
  assert float(rows[0]["ref_cr_log2"]) == pytest.approx(1.584962500721156)
  assert float(rows[-1]["cr_over_ref_log2"]) == pytest.approx(0, abs=1e-30)


def test_sweep_rejects_degenerate_range(capsys):
  assert main(["sweep", "--u-min", "3", "--u-max", "3"]) == 2
  assert "u_max must exceed u_min" in capsys.readouterr().err


def test_bad_number_is_a_usage_error():
  with pytest.raises(SystemExit) as e:
    main(["sweep", "--u-min", "abc"])
  assert e.value.code == 2


def test_diff_point_must_exceed_order():
  with pytest.raises(SystemExit) as e:
    main(["verify", "diff", "--k", "5", "--x", "3"])
  assert e.value.code == 2


def test_refutation_pair_needs_both():
  with pytest.raises(SystemExit) as e:
    main(["verify", "lower", "--a", "1"])
  assert e.value.code == 2


def test_verify_diff_point(capsys):
  assert main(["verify", "diff", "--k", "2", "--x", "6", "--precision-bits", "128", "--workers", "0"]) == 0
  report = json.loads(capsys.readouterr().out)
  assert report["pass"]
  assert {record["precision_bits"] for record in report["records"]} == {128}


def test_refute_emits_witness(capsys):
  assert main(["refute", "--a", "1", "--k", "3", "--format", "json"]) == 0
  result = json.loads(capsys.readouterr().out)
  assert result["witness"]["round_index"] <= 10


def test_refute_quartic_is_a_usage_error():
  assert main(["refute", "--a", "1", "--k", "4"]) == 2


def test_bad_custom_sequence():
  assert main(["trajectory", "--strategy", "spiral:1,2", "--rounds", "1"]) == 2


def test_precision_floor():
  with pytest.raises(SystemExit) as e:
    main(["sweep", "--precision-bits", "32"])
  assert e.value.code == 2


def test_oracle_reads_exported_trajectory(tmp_path: Path, capsys):
  path = tmp_path / "traj.csv"
  assert main(["trajectory", "--rounds", "3", "--digits", "80", "--out", str(path)]) == 0
  assert main(["oracle", "--u", "4", "--side", "1", "--rounds", "3", "--format", "json"]) == 0
  built = json.loads(capsys.readouterr().out)
  assert main(["oracle", "--u", "4", "--side", "1", "--trajectory", str(path), "--format", "json"]) == 0
  result = json.loads(capsys.readouterr().out)
  assert result["segment_index"] == built["segment_index"]
  assert float(result["oracle_time"]) == 36
  assert float(result["relative_discrepancy"]) < 1e-25


def test_oracle_rejects_malformed_trajectory(tmp_path: Path):
  path = tmp_path / "traj.csv"
  path.write_text("time,position\n0,0\n")
  assert main(["oracle", "--u", "2", "--trajectory", str(path)]) == 2
  assert main(["oracle", "--u", "2", "--trajectory", str(tmp_path / "absent.csv")]) == 2
