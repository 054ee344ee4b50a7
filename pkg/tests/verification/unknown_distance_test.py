from numerics import DEFAULT_NUMERICS
from search.errors import DomainError
from verification import check_unknown_d_bound
from verification.unknown_distance import check_unknown_d_grid, grid_axis
import pytest

N = DEFAULT_NUMERICS


def ratio(report):
  return report.diagnostics[-1]["cr"]


def test_small_product_branch():
  report = check_unknown_d_bound(2, 2, numerics=N)
  assert report.passed
  assert N.close(ratio(report), 5, N.real("1e-25"))


def test_unit_target_sits_on_the_bound():
  report = check_unknown_d_bound(1, 1, numerics=N)
  assert report.passed
  assert N.close(ratio(report), 9, N.real("1e-25"))


def test_large_product_branch():
  report = check_unknown_d_bound(3, 5, numerics=N)
  assert report.passed
  ids = {r.check_id for r in report.records}
  assert ids == {
    "unknown_d.dominance",
    "unknown_d.after_optimum",
    "unknown_d.analytic",
    "unknown_d.reduction",
    "unknown_d.theorem",
  }


def test_rejects_distance_below_one():
  with pytest.raises(DomainError):
    check_unknown_d_bound(2, "0.5", numerics=N)


def test_grid_axis_hits_endpoints():
  axis = grid_axis(N, 1, 16, 4)
  assert axis[0] == 1
  assert axis[-1] == 16
  assert all(N.close(a, b) for a, b in zip(axis, (1, 6, 11, 16)))


def test_small_grid_passes():
  report = check_unknown_d_grid(1, 16, 3, numerics=N)
  assert report.passed
  assert len(report.diagnostics) == 9
