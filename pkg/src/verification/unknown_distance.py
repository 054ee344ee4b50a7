from typing import Dict, Tuple

from catalog.entries import CatalogEntry, algorithm2
from numerics.real import DEFAULT_NUMERICS, Number, Numerics, Real
from oracle.intersect import intersect_extending
from search.errors import DomainError
from search.target import SIDES, Target
from verification.bounds import BoundSpec, unknown_distance_bound
from verification.invariants import ORACLE_AGREEMENT, relative_difference
from verification.records import VerificationReport, linear_record, log2_record
from zigzag.engine import DEFAULT_HORIZON

ORACLE_START_ROUNDS = 4


def oracle_catch_times(
    entry: CatalogEntry,
    u: Real,
    d: Real,
    horizon: int,
    numerics: Numerics
) -> Dict[int, Real]:
    """Catch time on each side, by intersecting the entry's own trajectory."""
    build = lambda rounds: entry.trajectory(d, rounds, numerics)
    return {
        side: intersect_extending(build, Target(u, d, side), ORACLE_START_ROUNDS, horizon + 1, numerics).time
        for side in SIDES
    }


def check_unknown_d_bound(
    u: Number,
    d: Number,
    horizon: int = DEFAULT_HORIZON,
    bound: BoundSpec = BoundSpec(),
    numerics: Numerics = DEFAULT_NUMERICS
) -> VerificationReport:
    """Catch times of the d = 1 layout for (u, d) against those for (ud, 1), and the resulting bounds."""
    u, d = numerics.real(u), numerics.real(d)
    if u < 1 or d < 1:
        raise DomainError(f"needs u >= 1 and d >= 1, got u={u}, d={d}")
    entry = algorithm2()
    opt = u * d
    actual = oracle_catch_times(entry, u, d, horizon, numerics)
    merged = oracle_catch_times(entry, opt, numerics.one(), horizon, numerics)

    report = VerificationReport()
    params: Dict[str, Number] = {"u": u, "d": d}
    for side in SIDES:
        side_params = {**params, "side": side}
        report.add(log2_record("unknown_d.dominance", side_params, numerics.log2(merged[side]) - numerics.log2(actual[side]), numerics))
        report.add(log2_record("unknown_d.after_optimum", side_params, numerics.log2(actual[side]) - numerics.log2(opt), numerics))
        analytic = entry.catch_time(Target(u, d, side), horizon, numerics)
        report.add(linear_record(
            "unknown_d.analytic",
            side_params,
            numerics.real(ORACLE_AGREEMENT) - relative_difference(actual[side], analytic),
            numerics
        ))

    ratio = max(actual.values()) / opt
    merged_ratio = max(merged.values()) / opt
    report.add(log2_record("unknown_d.reduction", params, numerics.log2(1 + (merged_ratio - 1) / d) - numerics.log2(ratio), numerics))
    report.add(log2_record("unknown_d.theorem", params, numerics.log2(unknown_distance_bound(numerics, u, d, bound)) - numerics.log2(ratio), numerics))
    report.diagnostics.append({"trace": "unknown_d.cr", "u": u, "d": d, "cr": ratio})
    return report


def grid_axis(numerics: Numerics, low: Number, high: Number, points: int) -> Tuple[Real, ...]:
    low, high = numerics.real(low), numerics.real(high)
    if points < 2:
        return (low,)
    return tuple(low + (high - low) * numerics.ratio(j, points - 1) for j in range(points))


def check_unknown_d_grid(
    low: Number = 1,
    high: Number = 16,
    points: int = 10,
    horizon: int = DEFAULT_HORIZON,
    bound: BoundSpec = BoundSpec(),
    numerics: Numerics = DEFAULT_NUMERICS
) -> VerificationReport:
    report = VerificationReport()
    axis = grid_axis(numerics, low, high, points)
    for u in axis:
        for d in axis:
            report.extend(check_unknown_d_bound(u, d, horizon, bound, numerics))
    return report
