from catalog import algorithm1
from numerics import DEFAULT_NUMERICS
from oracle import verify_strategy_validity
from search.trajectory import Trajectory
import io

N = DEFAULT_NUMERICS


def test_algorithm1_trajectory_is_valid():
  assert verify_strategy_validity(algorithm1(1).trajectory(1, 6, N), N).valid


def test_speeding_segment_flagged():
  report = verify_strategy_validity(Trajectory(((0, 0), (1, 2))), N)
  assert [(v.segment_index, v.kind) for v in report.violations] == [(0, "speed")]


def test_zero_duration_segment_flagged():
  report = verify_strategy_validity(Trajectory(((0, 0), (1, 1), (1, 0))), N)
  assert [(v.segment_index, v.kind) for v in report.violations] == [(1, "zero-duration")]


def test_origin_flagged():
  report = verify_strategy_validity(Trajectory(((1, 0), (2, 1))), N)
  assert report.violations[0].kind == "origin"


def test_csv_round_trip_keeps_validity():
  stream = io.StringIO()
  algorithm1(1).trajectory(1, 3, N).write_rows(stream)
  lines = stream.getvalue().splitlines()
  assert lines[:4] == ["t,x", "0,0", "4,4", "8,0"]
  stream.seek(0)
  traj = Trajectory.read_rows(stream, N)
  assert len(traj) == 7
  assert verify_strategy_validity(traj, N).valid
