from experiments import SweepConfig, sweep
from experiments.config import default_precision_bits
from experiments.sweep import LINEAR_HEADER, LOG2_HEADER, REFERENCE_LOG2_HEADER, header
from numerics import DEFAULT_NUMERICS
from search.errors import DomainError
import pytest

N = DEFAULT_NUMERICS
PLATEAU_LOG2 = N.log2(9 * N.exp2(6 * N.sqrt(2)) - 7)


def close(a, b):
  return N.close(a, b, N.real("1e-60"))


def test_small_u_rows_sit_at_nine():
  rows = sweep(SweepConfig(u_min="1", u_max="4", samples=7))
  assert len(rows) == 14
  assert all(close(row.cr_log2, N.log2(9)) for row in rows)
  assert all(row.slack_log2 >= -N.tolerance() for row in rows)


def test_second_plateau():
  rows = sweep(SweepConfig(u_min="4.5", u_max="179", samples=5))
  assert all(close(row.cr_log2, PLATEAU_LOG2) for row in rows)
  assert {row.catch_round for row in rows if row.side == 0} == {2}


def test_endpoints_are_exact():
  config = SweepConfig(u_min="1.5", u_max="333.3", samples=9)
  grid = config.grid()
  assert grid[0] == N.real("1.5")
  assert grid[-1] == N.real("333.3")
  assert len(grid) == 9


def test_linear_scale_spacing():
  grid = SweepConfig(u_min="1", u_max="5", samples=5, scale="linear").grid()
  assert all(close(a, b) for a, b in zip(grid, (1, 2, 3, 4, 5)))


def test_degenerate_range_rejected():
  with pytest.raises(DomainError):
    SweepConfig(u_min="3", u_max="3")
  with pytest.raises(DomainError):
    SweepConfig(samples=1)
  with pytest.raises(DomainError):
    SweepConfig(u_min="0.5")
  with pytest.raises(DomainError):
    SweepConfig(scale="cubic")


def test_sweep_is_deterministic():
  config = SweepConfig(u_min="1", u_max="1000", samples=12)
  serial = [row.fields() for row in sweep(config)]
  threaded = [row.fields() for row in sweep(config, max_workers=4)]
  assert serial == threaded
  assert all(len(fields) == len(LOG2_HEADER) for fields in serial)


def test_exhausted_horizon_leaves_fields_empty():
  rows = sweep(SweepConfig(u_min="1", u_max="1e9", samples=2, horizon=1))
  last = [row.fields() for row in rows if row.u == N.real("1e9")]
  assert any(fields[3] == "" for fields in last)
  assert all(fields[6] == "" for fields in last)


def test_unknown_distance_strategy_rows():
  rows = sweep(SweepConfig(strategy_id="algorithm-2", d="2", u_min="1", u_max="2", samples=2))
  assert close(rows[-1].cr_log2, N.log2(5))
  assert close(rows[-1].bound_log2, N.log2(5))


def test_linear_fields():
  row = sweep(SweepConfig(u_min="1", u_max="2", samples=2))[0]
  assert abs(float(row.fields(linear=True)[6]) - 9) < 1e-12
  assert header(True) == LINEAR_HEADER


def test_precision_from_environment(monkeypatch):
  monkeypatch.setenv("LSL_PRECISION_BITS", "512")
  assert default_precision_bits() == 512
  assert SweepConfig.with_defaults().precision_bits == 512
  monkeypatch.setenv("LSL_PRECISION_BITS", "12")
  with pytest.raises(DomainError):
    default_precision_bits()


def test_reference_columns_for_known_distance():
  rows = sweep(SweepConfig(u_min="1", u_max="4", samples=2, reference=True))
  first, last = rows[0], rows[-1]
  assert close(first.reference_log2, N.log2(3))
  assert close(last.reference_log2, N.log2(9))
  assert close(N.real(last.fields(reference=True)[-1]), N.zero())
  assert header(reference=True) == LOG2_HEADER + REFERENCE_LOG2_HEADER
  assert len(first.fields(reference=True)) == len(header(reference=True))


def test_reference_for_unknown_distance_strategy():
  rows = sweep(SweepConfig(strategy_id="algorithm-2", u_min="2", u_max="3", samples=2, reference=True))
  assert close(rows[0].reference_log2, N.log2(49))


def test_reference_columns_off_by_default():
  rows = sweep(SweepConfig(u_min="1", u_max="4", samples=2))
  assert rows[0].reference_log2 is None
  assert len(rows[0].fields()) == len(LOG2_HEADER)
