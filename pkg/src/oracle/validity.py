from dataclasses import dataclass, field
from typing import List

from numerics.real import DEFAULT_NUMERICS, Numerics
from search.trajectory import Trajectory


@dataclass(frozen=True)
class Violation:
    segment_index: int
    kind: str
    detail: str


@dataclass
class ValidityReport:
    violations: List[Violation] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return len(self.violations) == 0

    def add(self, segment_index: int, kind: str, detail: str):
        self.violations.append(Violation(segment_index, kind, detail))


def verify_strategy_validity(traj: Trajectory, numerics: Numerics = DEFAULT_NUMERICS) -> ValidityReport:
    """Reports where a trajectory breaks the unit speed limit or lets time stand still."""
    report = ValidityReport()
    tolerance = numerics.tolerance()

    t_0, x_0 = traj.vertices[0]
    if t_0 != 0 or x_0 != 0:
        report.add(-1, "origin", f"starts at ({t_0}, {x_0}) instead of (0, 0)")

    for index, ((t_a, x_a), (t_b, x_b)) in enumerate(traj.segments()):
        dt, dx = t_b - t_a, x_b - x_a
        if dt == 0:
            report.add(index, "zero-duration", f"segment at t={t_a} has no duration")
        elif dt < 0:
            report.add(index, "time-reversal", f"time runs back from {t_a} to {t_b}")
        elif abs(dx) > dt * (1 + tolerance):
            report.add(index, "speed", f"speed {abs(dx) / dt} exceeds 1")

    return report
