from hypothesis import given, settings
from hypothesis.strategies import integers
from catalog import ALGORITHM1_SPEC, parse_sequence
from numerics import DEFAULT_NUMERICS, Numerics
from search.errors import DomainError, ZigzagValidationError
from zigzag import compute_rounds
import pytest

N = DEFAULT_NUMERICS


def test_sequence_constants():
  assert ALGORITHM1_SPEC.u(N, 0) == 4
  assert abs(ALGORITHM1_SPEC.u(N, 1) - N.real("179.18")) < N.real("0.01")
  assert abs(ALGORITHM1_SPEC.u(N, 2) - N.real("903152.25")) < N.real("0.5")


def test_first_sums():
  ledger = compute_rounds(ALGORITHM1_SPEC, 1, 3, N)
  assert ledger.cumulative(-1) == 0
  assert ledger.s[0] == 4
  expected = N.ratio(9, 2) * N.exp2(6 * N.sqrt(2)) - 4
  assert N.close(ledger.s[1], expected)
  assert abs(ledger.s[1] - N.real("1608.64")) < N.real("0.01")


def test_first_round_scales_with_distance():
  assert compute_rounds(ALGORITHM1_SPEC, 7, 1, N).s[0] == 28


@given(integers(min_value=0, max_value=20))
@settings(deadline=None)
def test_recurrence(i):
  ledger = compute_rounds(ALGORITHM1_SPEC, 1, 21, N)
  s_prev = ledger.cumulative(i - 1)
  u = ledger.u[i]
  assert ledger.s[i] - s_prev == ledger.x[i]
  assert N.close(u + (2 * u - 1) * s_prev, ledger.s[i])


@given(integers(min_value=0, max_value=12))
@settings(deadline=None)
def test_log2_mirror_tracks_sums(i):
  ledger = compute_rounds(ALGORITHM1_SPEC, 3, 13, N)
  assert abs(ledger.log2_s[i].log2_magnitude - N.log2(ledger.s[i])) < N.real("1e-20")


def test_product_sandwich():
  ledger = compute_rounds(ALGORITHM1_SPEC, 1, 21, N)
  for i in range(21):
    product = ledger.product_log2(i)
    log2_s = ledger.log2_s[i].log2_magnitude
    assert product <= log2_s + N.tolerance()
    assert log2_s <= product + i + 1


def test_distance_below_one_rejected():
  with pytest.raises(DomainError):
    compute_rounds(ALGORITHM1_SPEC, N.real("0.5"), 3, N)


def test_constant_sequence_rejected():
  with pytest.raises(ZigzagValidationError) as e:
    compute_rounds(parse_sequence("geometric:5,1"), 1, 3, N)
  assert e.value.index == 0


def test_sequence_below_one_rejected():
  with pytest.raises(ZigzagValidationError):
    compute_rounds(parse_sequence("table:1,-1,2"), 1, 3, N)


def test_precisions_agree():
  low = compute_rounds(ALGORITHM1_SPEC, 1, 7, Numerics.at(256))
  high = compute_rounds(ALGORITHM1_SPEC, 1, 7, Numerics.at(512))
  for a, b in zip(low.s, high.s):
    assert abs(Numerics.at(512).real(a) - b) / b <= Numerics.at(512).ctx.ldexp(1, -128)
