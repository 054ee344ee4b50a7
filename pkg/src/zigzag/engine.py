from typing import List
import logging as l

from numerics.log2_real import Log2Real, log_sum
from numerics.real import DEFAULT_NUMERICS, Number, Numerics, Real
from search.errors import DomainError, HorizonExhaustedError
from search.target import SIDES, Target, direction
from search.trajectory import Trajectory, Vertex
from zigzag.ledger import RoundLedger, compute_rounds
from zigzag.sequence import ZigzagSpec

DEFAULT_HORIZON = 24


def _first_reaching(spec: ZigzagSpec, reaches, side: int, horizon: int, numerics: Numerics) -> int:
    # The scanned prefix must satisfy the same monotonicity compute_rounds demands.
    last = spec.last_round(horizon)
    for i in range(side, last + 1, 2):
        if reaches(i):
            spec.validate_prefix(numerics, i + 1)
            return i
    spec.validate_prefix(numerics, last + 1)
    raise HorizonExhaustedError(side, horizon)


def catch_round(
    spec: ZigzagSpec,
    u: Number,
    side: int,
    horizon: int = DEFAULT_HORIZON,
    numerics: Numerics = DEFAULT_NUMERICS
) -> int:
    """Smallest round i <= horizon on `side`'s parity with u_i >= u."""
    u = numerics.real(u)
    if u < 1:
        raise DomainError(f"evasiveness must be at least 1, got {u}")
    direction(side)
    return _first_reaching(spec, lambda i: spec.u(numerics, i) >= u, side, horizon, numerics)


def catch_round_log2(
    spec: ZigzagSpec,
    log2_u: Number,
    side: int,
    horizon: int = DEFAULT_HORIZON,
    numerics: Numerics = DEFAULT_NUMERICS
) -> int:
    log2_u = numerics.real(log2_u)
    if log2_u < 0:
        raise DomainError(f"log2 evasiveness must be non-negative, got {log2_u}")
    direction(side)
    return _first_reaching(spec, lambda i: spec.log2_u(numerics, i) >= log2_u, side, horizon, numerics)


def _ledger(spec: ZigzagSpec, d: Real, rounds: int, numerics: Numerics) -> RoundLedger:
    return compute_rounds(spec, d, max(rounds, 1), numerics)


def catch_time(
    spec: ZigzagSpec,
    target: Target,
    horizon: int = DEFAULT_HORIZON,
    numerics: Numerics = DEFAULT_NUMERICS
) -> Real:
    target = target.at(numerics)
    target.require_unit_distance()
    k = catch_round(spec, target.u, target.side, horizon, numerics)
    ledger = _ledger(spec, target.d, k, numerics)
    return target.u * target.d + 2 * target.u * ledger.cumulative(k - 1)


def catch_time_log2(
    spec: ZigzagSpec,
    target: Target,
    horizon: int = DEFAULT_HORIZON,
    numerics: Numerics = DEFAULT_NUMERICS
) -> Log2Real:
    target = target.at(numerics)
    target.require_unit_distance()
    k = catch_round(spec, target.u, target.side, horizon, numerics)
    ledger = _ledger(spec, target.d, k, numerics)
    log2_u = numerics.log2(target.u)
    return log_sum(
        Log2Real(log2_u + numerics.log2(target.d)),
        ledger.cumulative_log2(k - 1).scale(1 + log2_u)
    )


def side_ratio(ledger: RoundLedger, k: int) -> Real:
    """Competitive ratio on the side caught in round k."""
    return 1 + 2 * ledger.cumulative(k - 1) / ledger.d


def side_ratio_log2(ledger: RoundLedger, k: int) -> Real:
    numerics = ledger.numerics
    scaled = ledger.cumulative_log2(k - 1).scale(1 - numerics.log2(ledger.d))
    return log_sum(Log2Real(numerics.zero()), scaled).log2_magnitude


def catch_rounds(
    spec: ZigzagSpec,
    u: Number,
    horizon: int,
    numerics: Numerics
) -> List[int]:
    return [catch_round(spec, u, side, horizon, numerics) for side in SIDES]


def competitive_ratio(
    spec: ZigzagSpec,
    u: Number,
    d: Number,
    horizon: int = DEFAULT_HORIZON,
    numerics: Numerics = DEFAULT_NUMERICS
) -> Real:
    """Worst ratio of catch time to u*d over both sides."""
    d = numerics.real(d)
    rounds = catch_rounds(spec, u, horizon, numerics)
    ledger = _ledger(spec, d, max(rounds), numerics)
    return max(side_ratio(ledger, k) for k in rounds)


def competitive_ratio_log2(
    spec: ZigzagSpec,
    u: Number,
    d: Number,
    horizon: int = DEFAULT_HORIZON,
    numerics: Numerics = DEFAULT_NUMERICS
) -> Real:
    d = numerics.real(d)
    rounds = catch_rounds(spec, u, horizon, numerics)
    ledger = _ledger(spec, d, max(rounds), numerics)
    return max(side_ratio_log2(ledger, k) for k in rounds)


def catch_round_for_distance(
    spec: ZigzagSpec,
    target: Target,
    planned_d: Number,
    horizon: int = DEFAULT_HORIZON,
    numerics: Numerics = DEFAULT_NUMERICS
) -> int:
    """First round whose turn reaches a target at `target.d` while the strategy
    was laid out for distance `planned_d`.

    Round k on the target's side catches it iff x_k >= u d + (2u - 2) s_{k-1}.
    """
    target = target.at(numerics)
    last = spec.last_round(horizon)
    ledger = _ledger(spec, planned_d, last + 1, numerics)
    for k in range(target.side, last + 1, 2):
        needed = target.u * target.d + (2 * target.u - 2) * ledger.cumulative(k - 1)
        if ledger.x[k] >= needed:
            return k
    raise HorizonExhaustedError(target.side, horizon, f"planned for d={ledger.d}")


def catch_time_for_distance(
    spec: ZigzagSpec,
    target: Target,
    planned_d: Number,
    horizon: int = DEFAULT_HORIZON,
    numerics: Numerics = DEFAULT_NUMERICS
) -> Real:
    target = target.at(numerics)
    k = catch_round_for_distance(spec, target, planned_d, horizon, numerics)
    ledger = _ledger(spec, planned_d, k, numerics)
    return target.u * target.d + 2 * target.u * ledger.cumulative(k - 1)


def trajectory_vertices(ledger: RoundLedger) -> List[Vertex]:
    """Vertices (t, x): each round runs out to its turning point and back to 0."""
    zero = ledger.numerics.zero()
    vertices: List[Vertex] = [(zero, zero)]
    for i in range(ledger.rounds):
        s_prev = ledger.cumulative(i - 1)
        vertices.append((2 * s_prev + ledger.x[i], ledger.turning_point(i)))
        vertices.append((2 * ledger.s[i], zero))
    return vertices


def trajectory(
    spec: ZigzagSpec,
    d: Number,
    n_rounds: int,
    numerics: Numerics = DEFAULT_NUMERICS
) -> Trajectory:
    ledger = compute_rounds(spec, numerics.real(d), n_rounds, numerics)
    vertices = trajectory_vertices(ledger)
    l.debug(f"Built trajectory of {spec.name} with {len(vertices)} vertices")
    return Trajectory(tuple(vertices))
