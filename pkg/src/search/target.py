from dataclasses import dataclass

from numerics.real import Number, Numerics, Real
from search.errors import DomainError

SIDES = (0, 1)


def direction(side: int) -> int:
    if side not in SIDES:
        raise DomainError(f"side must be 0 or 1, got {side}")
    return 1 if side == 0 else -1


@dataclass(frozen=True)
class Target:
    """A target starting at distance `d` on `side` and fleeing at speed v = 1 - 1/u."""
    u: Real
    d: Real
    side: int

    def __post_init__(self):
        direction(self.side)
        if self.u < 1:
            raise DomainError(f"evasiveness must be at least 1, got {self.u}")
        if self.d <= 0:
            raise DomainError(f"distance must be positive, got {self.d}")

    @staticmethod
    def of(numerics: Numerics, u: Number, d: Number, side: int) -> 'Target':
        return Target(numerics.real(u), numerics.real(d), side)

    @staticmethod
    def from_speed(numerics: Numerics, v: Number, d: Number, side: int) -> 'Target':
        v = numerics.real(v)
        if not 0 <= v < 1:
            raise DomainError(f"speed must lie in [0, 1), got {v}")
        return Target(1 / (1 - v), numerics.real(d), side)

    @property
    def v(self) -> Real:
        return 1 - 1 / self.u

    @property
    def direction(self) -> int:
        return direction(self.side)

    def at(self, numerics: Numerics) -> 'Target':
        return Target.of(numerics, self.u, self.d, self.side)

    def opt_time(self) -> Real:
        return self.u * self.d

    def position(self, t: Real) -> Real:
        return self.direction * (self.d + t - t / self.u)

    def require_unit_distance(self):
        if self.d < 1:
            raise DomainError(f"the zigzag engine requires d >= 1, got {self.d}")
