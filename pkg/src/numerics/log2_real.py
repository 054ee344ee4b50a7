from dataclasses import dataclass

from numerics.real import Numerics, Number, Real
from search.errors import DomainError


@dataclass(frozen=True)
class Log2Real:
    """A non-negative quantity carried as its base-2 logarithm.

    `sign` is 1 for positive values and 0 for zero; -1 is representable so
    conversions can round-trip, but sums reject it.
    """
    log2_magnitude: Real
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise DomainError(f"sign must be -1, 0 or 1, got {self.sign}")

    @staticmethod
    def zero(numerics: Numerics) -> 'Log2Real':
        return Log2Real(numerics.ctx.ninf, 0)

    @staticmethod
    def of(numerics: Numerics, value: Number) -> 'Log2Real':
        x = numerics.real(value)
        if x == 0:
            return Log2Real.zero(numerics)
        return Log2Real(numerics.log2(abs(x)), 1 if x > 0 else -1)

    def to_real(self, numerics: Numerics) -> Real:
        if self.sign == 0:
            return numerics.zero()
        return self.sign * numerics.exp2(self.log2_magnitude)

    def __mul__(self, other: 'Log2Real') -> 'Log2Real':
        if self.sign == 0 or other.sign == 0:
            return Log2Real(self.log2_magnitude.context.ninf, 0)
        return Log2Real(self.log2_magnitude + other.log2_magnitude, self.sign * other.sign)

    def scale(self, log2_factor: Real) -> 'Log2Real':
        if self.sign == 0:
            return self
        return Log2Real(self.log2_magnitude + log2_factor, self.sign)

    def __add__(self, other: 'Log2Real') -> 'Log2Real':
        return log_sum(self, other)

    def __le__(self, other: 'Log2Real') -> bool:
        if self.sign < 0 or other.sign < 0:
            raise DomainError("log-domain comparison tracks non-negative values only")
        if self.sign == 0:
            return True
        if other.sign == 0:
            return False
        return self.log2_magnitude <= other.log2_magnitude


def log_sum(a: Log2Real, b: Log2Real) -> Log2Real:
    """log2(2^a + 2^b) without leaving the log domain."""
    if a.sign < 0 or b.sign < 0:
        raise DomainError("log-domain sums track non-negative values only")
    if a.sign == 0:
        return b
    if b.sign == 0:
        return a
    hi, lo = (a, b) if a.log2_magnitude >= b.log2_magnitude else (b, a)
    numerics = Numerics.at(hi.log2_magnitude.context.prec)
    gap = lo.log2_magnitude - hi.log2_magnitude
    return Log2Real(hi.log2_magnitude + numerics.log1p(numerics.exp2(gap)) / numerics.ctx.ln2, 1)
