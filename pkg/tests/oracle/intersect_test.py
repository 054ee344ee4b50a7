from hypothesis import given, settings
from hypothesis.strategies import floats, integers, sampled_from
from catalog import algorithm1, algorithm2
from numerics import DEFAULT_NUMERICS
from oracle import intersect, intersect_extending
from search.errors import HorizonExhaustedError
from search.target import Target
from search.trajectory import Trajectory
import pytest

N = DEFAULT_NUMERICS


def straight(length):
  return Trajectory(((N.zero(), N.zero()), (N.real(length), N.real(length))))


def test_straight_line_catches_standing_target():
  result = intersect(straight(10), Target.of(N, 1, 1, 0), N)
  assert result.time == 1
  assert result.segment_index == 0
  assert result.position == 1


def test_straight_line_catches_half_speed_target():
  result = intersect(straight(10), Target.from_speed(N, "0.5", 1, 0), N)
  assert result.time == 2


def test_target_on_the_other_side_is_not_caught():
  assert intersect(straight(10), Target.of(N, 1, 1, 1), N) is None


def test_short_trajectory_reports_not_caught():
  assert intersect(straight(1), Target.of(N, 3, 1, 0), N) is None


def test_collinear_segment_catches_at_its_start():
  shadow = Trajectory(((N.zero(), N.one()), (N.real(2), N.real(2))))
  result = intersect(shadow, Target.of(N, 2, 1, 0), N)
  assert result.time == 0
  assert result.segment_index == 0


def test_algorithm1_cross_check():
  entry = algorithm1(1)
  result = intersect(entry.trajectory(1, 2, N), Target.of(N, 4, 1, 1), N)
  assert abs(result.time - 36) < N.real("1e-25")


def test_turning_point_touch_counts():
  entry = algorithm1(1)
  u_2 = entry.spec.u(N, 2)
  target = Target(u_2, N.one(), 0)
  result = intersect(entry.trajectory(1, 3, N), target, N)
  assert N.close(result.time, entry.catch_time(target, numerics=N), N.real("1e-25"))


@given(floats(min_value=0, max_value=1), sampled_from([1, 2, 10]), integers(min_value=0, max_value=1))
@settings(deadline=None, max_examples=60)
def test_oracle_agrees_with_analytic(fraction, d, side):
  entry = algorithm1(d)
  u = N.exp2(N.real(fraction) * entry.spec.log2_u(N, 6))
  target = Target(u, N.real(d), side)
  k = entry.catch_round(target, 24, N)
  result = intersect(entry.trajectory(d, k + 1, N), target, N)
  assert result is not None
  assert abs(result.time - entry.catch_time(target, numerics=N)) <= N.real("1e-25") * result.time


@pytest.mark.parametrize("d", [1, 2, 10])
def test_late_round_odd_side_target(d):
  entry = algorithm1(d)
  target = Target(N.exp2(N.real(300)), N.real(d), 1)
  k = entry.catch_round(target, 24, N)
  assert k % 2 == 1 and k >= 7
  result = intersect(entry.trajectory(d, k + 1, N), target, N)
  assert result is not None
  assert result.position < 0
  assert N.close(result.time, entry.catch_time(target, numerics=N), N.real("1e-25"))


@given(floats(min_value=1, max_value=8), floats(min_value=1, max_value=8), integers(min_value=0, max_value=1))
@settings(deadline=None, max_examples=40)
def test_distance_dominance(u, d, side):
  entry = algorithm2()
  build = lambda rounds: entry.trajectory(1, rounds, N)
  near = intersect_extending(build, Target.of(N, u, d, side), 4, 25, N)
  far = intersect_extending(build, Target(N.real(u) * N.real(d), N.one(), side), 4, 25, N)
  assert near.time <= far.time * (1 + N.tolerance())
  assert near.time >= N.real(u) * N.real(d) * (1 - N.tolerance())


def test_extending_gives_up():
  build = lambda rounds: straight(rounds)
  with pytest.raises(HorizonExhaustedError) as e:
    intersect_extending(build, Target.of(N, 100, 1, 0), 1, 8, N)
  assert e.value.horizon == 7
