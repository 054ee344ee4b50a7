from dataclasses import dataclass, field
from functools import lru_cache
from typing import TypeAlias

from mpmath.ctx_mp import MPContext
from mpmath import mpf

from search.errors import DomainError

Real: TypeAlias = mpf
Number: TypeAlias = int | str | mpf

MIN_PRECISION_BITS = 64
DEFAULT_PRECISION_BITS = 256

# Tolerances are expressed as 2^-(p - TOLERANCE_GUARD_BITS).
TOLERANCE_GUARD_BITS = 16


@dataclass(frozen=True)
class Numerics:
    """Arbitrary-precision arithmetic at a fixed binary precision.

    Every instance owns its own mpmath context, so two precisions can be
    used side by side without touching global state. Instances are shared
    between worker threads, so nothing here may change a context's
    precision after construction; mpmath helpers that temporarily raise
    `ctx.prec` (log1p and friends) are replaced by methods below.
    """
    precision_bits: int = DEFAULT_PRECISION_BITS
    ctx: MPContext = field(init=False, repr=False, compare=False)
    wide: MPContext = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.precision_bits < MIN_PRECISION_BITS:
            raise DomainError(
                f"precision of {self.precision_bits} bits is below the "
                f"{MIN_PRECISION_BITS}-bit minimum"
            )
        ctx = MPContext()
        ctx.prec = self.precision_bits
        object.__setattr__(self, "ctx", ctx)
        # Wide enough to hold 1 + x exactly whenever log1p takes the direct path.
        wide = MPContext()
        wide.prec = 2 * self.precision_bits + 8
        object.__setattr__(self, "wide", wide)

    @staticmethod
    @lru_cache(maxsize=None)
    def at(precision_bits: int) -> 'Numerics':
        return Numerics(precision_bits)

    def doubled(self) -> 'Numerics':
        return Numerics.at(2 * self.precision_bits)

    def real(self, value: Number) -> Real:
        return self.ctx.mpf(value)

    def ratio(self, numerator: int, denominator: int) -> Real:
        return self.ctx.mpf(numerator) / denominator

    def zero(self) -> Real:
        return self.ctx.mpf(0)

    def one(self) -> Real:
        return self.ctx.mpf(1)

    def tolerance(self) -> Real:
        return self.ctx.ldexp(self.ctx.mpf(1), -(self.precision_bits - TOLERANCE_GUARD_BITS))

    def log2(self, value: Number) -> Real:
        """Base-2 logarithm, exact whenever the argument is a power of two."""
        x = self.real(value)
        if x <= 0:
            raise DomainError(f"log2 of non-positive value {x}")
        mantissa, exponent = self.ctx.frexp(x)
        if mantissa == 0.5:
            return self.real(exponent - 1)
        return exponent + self.ctx.log(mantissa) / self.ctx.ln2

    def log1p(self, value: Number) -> Real:
        """log(1 + x) at working precision, without touching `ctx.prec`."""
        x = self.real(value)
        if x <= -1:
            raise DomainError(f"log1p of {x}")
        if x == 0:
            return self.zero()
        if self.ctx.mag(x) < -(self.precision_bits // 2) - 4:
            return x - x * x / 2 + x * x * x / 3
        return self.ctx.log(self.wide.mpf(1) + self.wide.mpf(x))

    def exp2(self, value: Number) -> Real:
        return self.ctx.power(2, self.real(value))

    def sqrt(self, value: Number) -> Real:
        x = self.real(value)
        if x < 0:
            raise DomainError(f"square root of negative value {x}")
        return self.ctx.sqrt(x)

    def close(self, a: Real, b: Real, relative: Real | None = None) -> bool:
        tolerance = self.tolerance() if relative is None else relative
        scale = max(abs(a), abs(b), self.one())
        return abs(a - b) <= tolerance * scale


DEFAULT_NUMERICS = Numerics.at(DEFAULT_PRECISION_BITS)


def with_precision(value: Number, precision_bits: int) -> Real:
    """Re-rounds a value into a context of the given precision."""
    return Numerics.at(precision_bits).real(value)
