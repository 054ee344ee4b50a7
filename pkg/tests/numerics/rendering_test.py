from numerics import DEFAULT_NUMERICS, Numerics, render, render_fixed

N = DEFAULT_NUMERICS


def test_integers_render_without_fraction():
  assert render(N.real(9)) == "9"
  assert render(N.zero()) == "0"


def test_render_round_trips_at_moderate_precision():
  M = Numerics.at(128)
  for value in (M.sqrt(2), M.ctx.pi, M.exp2(6 * M.sqrt(2) - 1), M.real("0.1")):
    assert M.real(render(value)) == value


def test_render_caps_digits():
  digits = render(N.sqrt(2)).replace(".", "")
  assert len(digits) == 50


def test_render_is_shortest():
  assert render(N.real("1.5")) == "1.5"
  assert render(N.ratio(1, 4)) == "0.25"


def test_render_fixed_strips_trailing_zero():
  assert render_fixed(N.real(4), 40) == "4"
  assert render_fixed(N.real(8), 40) == "8"
