from hypothesis import given
from hypothesis.strategies import integers
from numerics import DEFAULT_NUMERICS, Numerics, with_precision
from search.errors import DomainError
import pytest

N = DEFAULT_NUMERICS


@given(integers(min_value=-2000, max_value=2000))
def test_log2_exact_for_powers_of_two(e):
  assert N.log2(N.ctx.ldexp(1, e)) == e


def test_log2_rejects_non_positive():
  with pytest.raises(DomainError):
    N.log2(0)


def test_precision_below_minimum_rejected():
  with pytest.raises(DomainError):
    Numerics(32)
  with pytest.raises(DomainError):
    with_precision(1, 63)


def test_contexts_are_independent():
  low, high = Numerics.at(128), Numerics.at(512)
  assert low.ctx.prec == 128
  assert high.ctx.prec == 512
  assert low.sqrt(2) != high.sqrt(2)


def test_with_precision_rounds_to_target():
  pi = Numerics.at(256).ctx.pi
  assert with_precision(pi, 128) == Numerics.at(128).ctx.pi


def test_with_precision_same_precision_is_identity():
  high = Numerics.at(512)
  u_1 = high.exp2(6 * high.sqrt(2) - 1)
  assert with_precision(u_1, 512) == u_1


def test_cross_precision_rounding_is_tight():
  low, high = Numerics.at(256), Numerics.at(512)
  s_1 = lambda n: n.ratio(9, 2) * n.exp2(6 * n.sqrt(2)) - 4
  lifted = with_precision(s_1(low), 512)
  assert abs(lifted - s_1(high)) / s_1(high) < high.ctx.ldexp(1, -128)


def test_log1p_matches_log_of_sum():
  for x in ("3", "0.5", "-0.25", "1e-3"):
    assert N.close(N.log1p(x), N.ctx.log(1 + N.real(x)))
  tiny = N.ctx.ldexp(1, -400)
  assert N.close(N.log1p(tiny), tiny)
  assert N.log1p(0) == 0
  assert N.ctx.prec == 256


def test_log1p_rejects_minus_one():
  with pytest.raises(DomainError):
    N.log1p(-1)
