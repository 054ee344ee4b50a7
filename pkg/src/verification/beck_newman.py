from dataclasses import dataclass, field
from typing import Tuple

from numerics.real import DEFAULT_NUMERICS, Number, Numerics, Real
from search.errors import DomainError
from verification.records import VerificationReport, flag_record
from zigzag.sequence import ZigzagSpec


@dataclass(frozen=True)
class BeckNewmanState:
    """Weights z_i with their scaled partial sums y_i = 2^-i sum_{n <= i} z_n."""
    z: Tuple[Real, ...]
    h: Real
    y: Tuple[Real, ...] = field(init=False)

    def __post_init__(self):
        if not 0 < self.h < 4:
            raise DomainError(f"h must lie in (0, 4), got {self.h}")
        for i, z_i in enumerate(self.z):
            if z_i < 0 or (i >= 2 and z_i == 0):
                raise DomainError(f"z_{i} = {z_i} breaks positivity (z_0, z_1 >= 0 and z_i > 0 for i >= 2)")
        ctx = self.h.context
        running = ctx.mpf(0)
        y = []
        for i, z_i in enumerate(self.z):
            running += z_i
            y.append(ctx.ldexp(running, -i))
        object.__setattr__(self, "y", tuple(y))

    @staticmethod
    def of(numerics: Numerics, z, h: Number) -> 'BeckNewmanState':
        return BeckNewmanState(tuple(numerics.real(z_i) for z_i in z), numerics.real(h))

    @staticmethod
    def from_strategy(spec: ZigzagSpec, h: Number, n_terms: int, numerics: Numerics = DEFAULT_NUMERICS) -> 'BeckNewmanState':
        """z_i = log2 u_i of a zigzag strategy."""
        return BeckNewmanState.of(numerics, [spec.log2_u(numerics, i) for i in range(n_terms)], h)

    @property
    def gamma(self) -> Real:
        return (4 - self.h) / self.h

    def condition(self, i: int) -> bool:
        """h z_i >= sum_{n <= i+1} z_n."""
        return self.h * self.z[i] >= sum(self.z[: i + 2])

    def second_difference(self, i: int) -> Real:
        return self.y[i + 2] - 2 * self.y[i + 1] + self.y[i]

    def concave(self, i: int) -> bool:
        """y_{i+2} - 2 y_{i+1} + y_i <= -gamma y_{i+2}."""
        return self.second_difference(i) <= -self.gamma * self.y[i + 2]


def beck_newman_check(
    state: BeckNewmanState,
    m: int,
    i_max: int,
    numerics: Numerics = DEFAULT_NUMERICS
) -> VerificationReport:
    """For each i in [m, i_max]: whether the condition holds at i and whether the
    second-difference inequality holds. The inequality at i follows from the
    condition at i + 1, and a record fails only where that implication breaks.
    """
    if m < 0 or i_max < m:
        raise DomainError(f"need 0 <= m <= i_max, got m={m}, i_max={i_max}")
    if len(state.z) < i_max + 3:
        raise DomainError(f"{len(state.z)} weights cannot cover i_max={i_max}; need {i_max + 3}")

    report = VerificationReport()
    first_failure = None
    for i in range(m, i_max + 1):
        holds = state.condition(i)
        if not holds and first_failure is None:
            first_failure = i
        premise = state.condition(i + 1)
        concave = state.concave(i)
        margin = -state.gamma * state.y[i + 2] - state.second_difference(i)
        report.add(flag_record(
            "beck_newman.implication",
            {"i": i, "h": state.h, "condition": holds, "premise": premise, "concave": concave},
            not premise or concave,
            numerics,
            margin
        ))
        report.diagnostics.append({"trace": "beck_newman", "i": i, "condition": holds, "concave": concave})

    report.notes["beck_newman.first_condition_failure"] = first_failure
    return report
