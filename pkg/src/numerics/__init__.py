from numerics.real import (
    DEFAULT_NUMERICS,
    DEFAULT_PRECISION_BITS,
    MIN_PRECISION_BITS,
    Number,
    Numerics,
    Real,
    with_precision,
)
from numerics.log2_real import Log2Real, log_sum
from numerics.rendering import render, render_fixed
