import os

from numerics.real import DEFAULT_PRECISION_BITS, MIN_PRECISION_BITS
from numerics.rendering import MAX_RENDER_DIGITS
from search.errors import DomainError
from search.trajectory import DEFAULT_TRAJECTORY_DIGITS
from zigzag.engine import DEFAULT_HORIZON

DEFAULT_I_MAX = 12
DEFAULT_SAMPLES = 64
DEFAULT_WORKERS = 7

# --linear leaves a column empty past this magnitude
MAX_LINEAR_LOG2 = 1024

__all__ = [
    "DEFAULT_HORIZON",
    "DEFAULT_I_MAX",
    "DEFAULT_PRECISION_BITS",
    "DEFAULT_SAMPLES",
    "DEFAULT_TRAJECTORY_DIGITS",
    "DEFAULT_WORKERS",
    "MAX_LINEAR_LOG2",
    "MAX_RENDER_DIGITS",
    "default_precision_bits",
]


def default_precision_bits() -> int:
    """LSL_PRECISION_BITS if set, else 256."""
    value = os.getenv("LSL_PRECISION_BITS")
    if value is None:
        return DEFAULT_PRECISION_BITS
    try:
        bits = int(value)
    except ValueError:
        raise DomainError(f"LSL_PRECISION_BITS must be an integer, got '{value}'")
    if bits < MIN_PRECISION_BITS:
        raise DomainError(f"LSL_PRECISION_BITS must be at least {MIN_PRECISION_BITS}, got {bits}")
    return bits
