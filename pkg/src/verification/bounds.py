from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from numerics.real import Number, Numerics, Real
from search.errors import DomainError

THEOREM_CONSTANT = Fraction(5618, 100)

# Competitive ratio of the known-distance strategy for u <= 4.
SMALL_U_RATIO = 9

Correction = Callable[[Numerics, Real], Real]


def log_log_correction(numerics: Numerics, log2_u: Real) -> Real:
    """h(u) = (log2 log2 u)^-2, taking log2 u as its argument."""
    if log2_u <= 1:
        raise DomainError(f"log2 log2 u is not positive for log2 u = {log2_u}")
    return numerics.log2(log2_u) ** -2


@dataclass(frozen=True)
class BoundSpec:
    """F(u) = c * u^(4 - h(u)) on u > domain_min.

    `h` receives log2 u so that F can be evaluated at any magnitude.
    """
    c: Fraction = THEOREM_CONSTANT
    h: Correction = log_log_correction
    domain_min: int = 4

    def constant(self, numerics: Numerics) -> Real:
        return numerics.ratio(self.c.numerator, self.c.denominator)

    def log2_value(self, numerics: Numerics, log2_u: Number) -> Real:
        log2_u = numerics.real(log2_u)
        return numerics.log2(self.constant(numerics)) + (4 - self.h(numerics, log2_u)) * log2_u

    def value(self, numerics: Numerics, u: Number) -> Real:
        return numerics.exp2(self.log2_value(numerics, numerics.log2(u)))

    def with_constant(self, c: Fraction) -> 'BoundSpec':
        return BoundSpec(c, self.h, self.domain_min)


def upper_bound_log2(numerics: Numerics, u: Number, bound: BoundSpec = BoundSpec()) -> Real:
    """log2 of the known-distance guarantee: 9 up to u = 4, F(u) beyond."""
    u = numerics.real(u)
    if u < 1:
        raise DomainError(f"evasiveness must be at least 1, got {u}")
    if u <= bound.domain_min:
        return numerics.log2(SMALL_U_RATIO)
    return bound.log2_value(numerics, numerics.log2(u))


def unknown_distance_bound(numerics: Numerics, u: Number, d: Number, bound: BoundSpec = BoundSpec()) -> Real:
    """Guarantee for the strategy laid out for d = 1: 1 + 8/d up to ud = 4, 1 + (F(ud) - 1)/d beyond."""
    u, d = numerics.real(u), numerics.real(d)
    if u < 1 or d < 1:
        raise DomainError(f"needs u >= 1 and d >= 1, got u={u}, d={d}")
    if u * d <= bound.domain_min:
        return 1 + (SMALL_U_RATIO - 1) / d
    return 1 + (bound.value(numerics, u * d) - 1) / d
