from fractions import Fraction
from hypothesis import given, settings
from hypothesis.strategies import floats
from catalog import algorithm1
from numerics import DEFAULT_NUMERICS
from search.errors import DomainError
from verification import BoundSpec, check_upper_bound, find_min_constant, h_trace, unknown_distance_bound, upper_bound_log2
from verification.bounds import THEOREM_CONSTANT
from verification.upper_bound import check_f_increasing
import pytest

N = DEFAULT_NUMERICS


def test_f_at_four():
  assert abs(BoundSpec().value(N, 4) - N.real("3595.52")) < N.real("0.01")


def test_small_u_branch_is_nine():
  assert upper_bound_log2(N, 1) == N.log2(9)
  assert upper_bound_log2(N, 4) == N.log2(9)
  assert upper_bound_log2(N, 5) == BoundSpec().log2_value(N, N.log2(5))


def test_f_evaluates_at_huge_u():
  log2_u = N.real(10) ** 5
  value = BoundSpec().log2_value(N, log2_u)
  assert 3 * log2_u < value < 4 * log2_u + 6


def test_correction_rejects_small_u():
  with pytest.raises(DomainError):
    BoundSpec().log2_value(N, 1)


def test_unknown_distance_branches():
  assert unknown_distance_bound(N, 2, 2) == 5
  assert unknown_distance_bound(N, 1, 1) == 9
  assert N.close(unknown_distance_bound(N, 3, 5), 1 + (BoundSpec().value(N, 15) - 1) / 5)
  with pytest.raises(DomainError):
    unknown_distance_bound(N, 2, "0.5")


@given(floats(min_value=2.01, max_value=10 ** 4))
@settings(deadline=None)
def test_f_grows_with_u(log2_u):
  bound = BoundSpec()
  assert bound.log2_value(N, log2_u) < bound.log2_value(N, N.real(log2_u) * N.real("1.01"))


def test_algorithm1_stays_below_theorem_bound():
  report = check_upper_bound(algorithm1(), BoundSpec(), 12, N)
  assert report.passed
  key_points = [r for r in report.records if r.check_id == "upper.key_point"]
  assert [r.params["i"] for r in key_points] == list(range(1, 13))
  assert all(r.margin_log2 > 0 for r in key_points)


def test_tiny_constant_fails():
  report = check_upper_bound(algorithm1(), BoundSpec().with_constant(Fraction(1)), 4, N)
  assert not report.passed


def test_f_increasing_check():
  assert check_f_increasing(BoundSpec(), N.real(10 ** 4), N).passed
  with pytest.raises(DomainError):
    check_f_increasing(BoundSpec(), N.real(1), N)


def test_min_constant_fits_under_theorem_constant():
  c = find_min_constant(algorithm1(), BoundSpec(), 12, Fraction(1, 100), N)
  assert 0 < c <= THEOREM_CONSTANT
  assert check_upper_bound(algorithm1(), BoundSpec().with_constant(c), 12, N).passed


def test_h_trace_stays_above_lower_bound():
  trace = h_trace(algorithm1(), 8, N)
  assert [entry["i"] for entry in trace] == list(range(1, 9))
  assert trace[-1]["h"] > trace[0]["h"]
  assert all(entry["h"] >= entry["lower_bound"] for entry in trace)
