from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple
import logging as l

from numerics.log2_real import Log2Real, log_sum
from numerics.real import DEFAULT_NUMERICS, Number, Numerics, Real
from search.errors import DomainError, HorizonExhaustedError
from zigzag.sequence import ZigzagSpec


@dataclass(frozen=True)
class RoundLedger:
    """Turning points x_i and cumulative sums s_i of a zigzag strategy.

    x_i = u_i d + (2u_i - 2) s_{i-1}, s_i = x_i + s_{i-1}, s_{-1} = 0.
    """
    spec: ZigzagSpec
    numerics: Numerics
    d: Real
    log2_u: Tuple[Real, ...]
    u: Tuple[Real, ...]
    x: Tuple[Real, ...]
    s: Tuple[Real, ...]
    log2_s: Tuple[Log2Real, ...]

    @property
    def rounds(self) -> int:
        return len(self.x)

    def _check(self, i: int):
        if not -1 <= i < self.rounds:
            raise HorizonExhaustedError(i % 2, self.rounds - 1, f"ledger holds rounds 0..{self.rounds - 1}")

    def cumulative(self, i: int) -> Real:
        self._check(i)
        return self.numerics.zero() if i == -1 else self.s[i]

    def cumulative_log2(self, i: int) -> Log2Real:
        self._check(i)
        return Log2Real.zero(self.numerics) if i == -1 else self.log2_s[i]

    def turning_point(self, i: int) -> Real:
        """Signed position of the i-th turn."""
        self._check(i)
        return self.x[i] if i % 2 == 0 else -self.x[i]

    def product_log2(self, i: int) -> Real:
        """log2 of d * u_0 * ... * u_i."""
        return self.numerics.log2(self.d) + sum(self.log2_u[: i + 1], self.numerics.zero())


def log2_twice_minus_one(numerics: Numerics, w: Real) -> Real:
    """log2(2u - 1) for u = 2^w."""
    if w == 0:
        return numerics.zero()
    return w + 1 + numerics.log1p(-numerics.exp2(-w - 1)) / numerics.ctx.ln2


@lru_cache(maxsize=256)
def compute_rounds(
    spec: ZigzagSpec,
    d: Number,
    n_rounds: int,
    numerics: Numerics = DEFAULT_NUMERICS
) -> RoundLedger:
    if n_rounds < 1:
        raise DomainError(f"a ledger needs at least one round, got {n_rounds}")
    d = numerics.real(d)
    if d < 1:
        raise DomainError(f"the zigzag engine requires d >= 1, got {d}")
    spec.validate_prefix(numerics, n_rounds)

    log2_d = numerics.log2(d)
    s_prev = numerics.zero()
    log2_s_prev = Log2Real.zero(numerics)
    log2_us, us, xs, ss, log2_ss = [], [], [], [], []

    for i in range(n_rounds):
        w = spec.log2_u(numerics, i)
        u = numerics.exp2(w)
        x = u * d + (2 * u - 2) * s_prev
        s = x + s_prev
        tail = Log2Real(log2_twice_minus_one(numerics, w)) * log2_s_prev
        log2_s = log_sum(Log2Real(w + log2_d), tail)

        log2_us.append(w)
        us.append(u)
        xs.append(x)
        ss.append(s)
        log2_ss.append(log2_s)
        s_prev, log2_s_prev = s, log2_s

    l.debug(f"Computed {n_rounds} rounds of {spec.name} at d={d} with {numerics.precision_bits} bits")

    return RoundLedger(spec, numerics, d, tuple(log2_us), tuple(us), tuple(xs), tuple(ss), tuple(log2_ss))
