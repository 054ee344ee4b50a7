from dataclasses import dataclass
from typing import Callable

from numerics.real import Number, Numerics, Real
from search.errors import DomainError, HorizonExhaustedError, ZigzagValidationError

Log2Sequence = Callable[[Numerics, int], Number]


@dataclass(frozen=True)
class ZigzagSpec:
    """A zigzag strategy, described by log2 of its evasiveness sequence u_i.

    `length` bounds finite sequences; None means the sequence is defined for
    every round.
    """
    name: str
    eval_log2_u: Log2Sequence
    length: int | None = None

    def last_round(self, horizon: int) -> int:
        if self.length is None:
            return horizon
        return min(horizon, self.length - 1)

    def log2_u(self, numerics: Numerics, i: int) -> Real:
        if i < 0:
            raise DomainError(f"round index must be non-negative, got {i}")
        if self.length is not None and i >= self.length:
            raise HorizonExhaustedError(i % 2, self.length - 1, f"{self.name} defines {self.length} rounds")
        w = numerics.real(self.eval_log2_u(numerics, i))
        if w < 0:
            raise ZigzagValidationError(i, f"u_{i} < 1")
        return w

    def u(self, numerics: Numerics, i: int) -> Real:
        return numerics.exp2(self.log2_u(numerics, i))

    def validate_prefix(self, numerics: Numerics, n_rounds: int):
        """Checks u_{i+2} > u_i for all i with i + 2 < n_rounds."""
        log2_u = [self.log2_u(numerics, i) for i in range(n_rounds)]
        for i in range(n_rounds - 2):
            if not log2_u[i + 2] > log2_u[i]:
                raise ZigzagValidationError(i, f"u_{i + 2} does not exceed u_{i}")

    def validate_increasing(self, numerics: Numerics, n_rounds: int):
        log2_u = [self.log2_u(numerics, i) for i in range(n_rounds)]
        for i in range(n_rounds - 1):
            if not log2_u[i + 1] > log2_u[i]:
                raise ZigzagValidationError(i, f"u_{i + 1} does not exceed u_{i}")
