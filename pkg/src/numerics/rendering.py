from numerics.real import Real

MAX_RENDER_DIGITS = 50


def _tidy(text: str) -> str:
    if "e" in text:
        mantissa, exponent = text.split("e")
        if mantissa.endswith(".0"):
            mantissa = mantissa[:-2]
        return f"{mantissa}e{exponent}"
    if text.endswith(".0"):
        return text[:-2]
    return text


def render(value: Real, max_digits: int = MAX_RENDER_DIGITS) -> str:
    """Shortest decimal that reads back to the same value, capped at `max_digits`."""
    ctx = value.context
    if ctx.isinf(value) or ctx.isnan(value):
        return str(value)
    text = ""
    for digits in range(1, max_digits + 1):
        text = _tidy(ctx.nstr(value, digits))
        if ctx.mpf(text) == value:
            return text
    return text


def render_fixed(value: Real, digits: int) -> str:
    return _tidy(value.context.nstr(value, digits))
