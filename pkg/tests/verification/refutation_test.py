from catalog import algorithm1, custom_sequence
from numerics import DEFAULT_NUMERICS
from search.errors import DomainError
from verification import refute_polynomial_bound
from verification.refutation import REFUTATION_A_GRID, REFUTATION_K_GRID, check_refutation_grid
import pytest

N = DEFAULT_NUMERICS


def test_cubic_bound_refuted_early():
  witness = refute_polynomial_bound(algorithm1(), 1, 3, 10, numerics=N)
  assert witness is not None
  assert witness.round_index <= 10
  assert witness.margin_log2 > 0


def test_near_quartic_bound_refuted():
  witness = refute_polynomial_bound(algorithm1(), 10 ** 6, "3.9", 20, numerics=N)
  assert witness is not None
  assert witness.round_index <= 20


def test_exact_variant_is_no_weaker():
  product = refute_polynomial_bound(algorithm1(), 10 ** 3, "3.5", 40, numerics=N)
  exact = refute_polynomial_bound(algorithm1(), 10 ** 3, "3.5", 40, exact=True, numerics=N)
  assert exact.round_index <= product.round_index


def test_witness_point_lies_in_round():
  entry = algorithm1()
  witness = refute_polynomial_bound(entry, 1, 2, numerics=N)
  i = witness.round_index
  assert entry.spec.log2_u(N, i) < witness.u_star_log2 <= entry.spec.log2_u(N, i + 2)
  assert witness.u_star(N) > 1


def test_quartic_rejected():
  with pytest.raises(DomainError):
    refute_polynomial_bound(algorithm1(), 1, 4, numerics=N)
  with pytest.raises(DomainError):
    refute_polynomial_bound(algorithm1(), 0, 2, numerics=N)


def test_no_witness_for_slow_strategy():
  slow = custom_sequence("geometric:1,2")
  assert refute_polynomial_bound(slow, 10 ** 6, "3.9", 2, numerics=N) is None


def test_every_grid_pair_has_a_witness():
  report = check_refutation_grid(algorithm1(), numerics=N)
  assert report.passed
  assert len(report.records) == 2 * len(REFUTATION_A_GRID) * len(REFUTATION_K_GRID)
