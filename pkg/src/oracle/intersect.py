from dataclasses import dataclass
from typing import Callable
import logging as l

from numerics.real import DEFAULT_NUMERICS, Numerics, Real
from search.errors import DomainError, HorizonExhaustedError
from search.target import Target
from search.trajectory import Trajectory


@dataclass(frozen=True)
class CatchResult:
    time: Real
    segment_index: int
    position: Real


def _snap_unit_slope(numerics: Numerics, slope: Real) -> Real:
    tolerance = numerics.tolerance()
    if abs(abs(slope) - 1) <= tolerance:
        return numerics.one() if slope > 0 else -numerics.one()
    return slope


def intersect(
    traj: Trajectory,
    target: Target,
    numerics: Numerics = DEFAULT_NUMERICS
) -> CatchResult | None:
    """Earliest time the trajectory meets the target, or None if it never does.

    The target's world-line is x = sigma (d + t - t/u); each segment is solved
    in closed form in terms of u so that huge u never rounds the speed to 1.
    """
    target = target.at(numerics)
    u, d, sigma = target.u, target.d, target.direction
    tolerance = numerics.tolerance()

    for index, ((t_a, x_a), (t_b, x_b)) in enumerate(traj.segments()):
        t_a, x_a, t_b, x_b = (numerics.real(value) for value in (t_a, x_a, t_b, x_b))
        dt = t_b - t_a
        if dt <= 0:
            continue
        slope = _snap_unit_slope(numerics, (x_b - x_a) / dt)

        numerator = u * (sigma * d - x_a + slope * t_a)
        denominator = u * (slope - sigma) + sigma
        if denominator == 0:
            if abs(numerator) > tolerance * max(abs(u * x_a), u * d, 1):
                continue
            time = t_a
        else:
            time = numerator / denominator

        # Each end of the window gets slack relative to its own time.
        if time < t_a - tolerance * max(abs(t_a), 1) or time > t_b + tolerance * max(abs(t_b), 1):
            continue
        time = min(max(time, t_a), t_b)
        caught = target.position(time)
        robot = x_a + slope * (time - t_a)
        if abs(robot - caught) > 4 * tolerance * max(abs(x_a), abs(x_b), t_b, 1):
            continue
        return CatchResult(time, index, caught)

    l.debug(f"Target {target} not caught within {len(traj)} vertices")
    return None


def intersect_extending(
    build: Callable[[int], Trajectory],
    target: Target,
    start_rounds: int,
    max_rounds: int,
    numerics: Numerics = DEFAULT_NUMERICS
) -> CatchResult:
    """Retries `intersect` on ever longer trajectory prefixes built by `build`."""
    if start_rounds < 1:
        raise DomainError(f"need at least one round, got {start_rounds}")
    rounds = start_rounds
    while True:
        result = intersect(build(rounds), target, numerics)
        if result is not None:
            return result
        if rounds >= max_rounds:
            raise HorizonExhaustedError(target.side, max_rounds - 1, "oracle found no intersection")
        rounds = min(2 * rounds, max_rounds)
        l.debug(f"Retrying intersection with {rounds} rounds")
