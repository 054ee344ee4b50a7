from typing import List
import random

from catalog.entries import CatalogEntry
from numerics.real import DEFAULT_NUMERICS, Number, Numerics, Real
from oracle.intersect import intersect
from search.errors import DomainError
from search.target import SIDES, Target
from verification.records import VerificationReport, flag_record, linear_record, log2_record
from zigzag import engine
from zigzag.engine import side_ratio_log2

ORACLE_AGREEMENT = "1e-25"
LOG_LINEAR_AGREEMENT = "1e-20"
LOWER_FAMILY_FRACTIONS = ((1, 2 ** 20), (1, 2), (1, 1))


def check_recurrence(entry: CatalogEntry, i_max: int = 20, numerics: Numerics = DEFAULT_NUMERICS) -> VerificationReport:
    """s_i - s_{i-1} = x_i, s_i = u_i d + (2u_i - 1) s_{i-1}, and the log2 mirror tracks log2 s_i."""
    ledger = entry.ledger(entry.nominal_d, i_max + 1, numerics)
    report = VerificationReport()
    agreement = numerics.real(LOG_LINEAR_AGREEMENT)
    for i in range(i_max + 1):
        s_prev, s = ledger.cumulative(i - 1), ledger.s[i]
        u = ledger.u[i]
        params = {"strategy": entry.strategy_id, "i": i}
        report.add(linear_record("engine.recurrence.step", params, -abs((s - s_prev) - ledger.x[i]), numerics, s))
        report.add(linear_record("engine.recurrence.closed", params, -abs(u * ledger.d + (2 * u - 1) * s_prev - s), numerics, s))
        drift = abs(ledger.log2_s[i].log2_magnitude - numerics.log2(s))
        report.add(linear_record("engine.recurrence.log_linear", params, agreement - drift, numerics))
    return report


def check_product_sandwich(entry: CatalogEntry, i_max: int = 20, numerics: Numerics = DEFAULT_NUMERICS) -> VerificationReport:
    """d prod u_n <= s_i <= 2^(i+1) d prod u_n, in log2."""
    ledger = entry.ledger(entry.nominal_d, i_max + 1, numerics)
    report = VerificationReport()
    for i in range(i_max + 1):
        product = ledger.product_log2(i)
        log2_s = ledger.log2_s[i].log2_magnitude
        params = {"strategy": entry.strategy_id, "i": i}
        report.add(log2_record("engine.sandwich.lower", params, log2_s - product, numerics))
        report.add(log2_record("engine.sandwich.upper", params, product + i + 1 - log2_s, numerics))
    return report


def check_lower_bound_family(entry: CatalogEntry, i_max: int = 10, numerics: Numerics = DEFAULT_NUMERICS) -> VerificationReport:
    """For u in (u_i, u_{i+2}], CR(u) >= 1 + (2/d) s_{i+1}, with equality on the side of i's parity.

    Also checks that each side's ratio only grows with u across the samples.
    """
    ledger = entry.ledger(entry.nominal_d, i_max + 4, numerics)
    report = VerificationReport()
    samples = []

    for i in range(i_max + 1):
        lower = side_ratio_log2(ledger, i + 2)
        gap = ledger.log2_u[i + 2] - ledger.log2_u[i]
        for numerator, denominator in LOWER_FAMILY_FRACTIONS:
            if numerator == denominator:
                log2_u = ledger.log2_u[i + 2]
            else:
                log2_u = ledger.log2_u[i] + gap * numerics.ratio(numerator, denominator)
            rounds = {side: engine.catch_round_log2(entry.spec, log2_u, side, i_max + 3, numerics) for side in SIDES}
            ratios = {side: side_ratio_log2(ledger, k) for side, k in rounds.items()}
            params = {"strategy": entry.strategy_id, "i": i, "fraction": f"{numerator}/{denominator}"}

            report.add(log2_record("lower.family", params, max(ratios.values()) - lower, numerics))
            parity = i % 2
            report.add(flag_record("lower.family.parity_round", params, rounds[parity] == i + 2, numerics))
            report.add(linear_record("lower.family.parity_ratio", params, -abs(ratios[parity] - lower), numerics, lower))
            samples.append((log2_u, ratios))

    samples.sort(key=lambda sample: sample[0])
    for side in SIDES:
        ratios = [sample[1][side] for sample in samples]
        steps = [b - a for a, b in zip(ratios, ratios[1:])]
        report.add(log2_record("engine.step_structure", {"strategy": entry.strategy_id, "side": side}, min(steps), numerics))
    return report


def check_d_scaling(
    entry: CatalogEntry,
    u_values: List[Number] = (2, 100, 10 ** 6),
    scales: List[Number] = (2, 10),
    numerics: Numerics = DEFAULT_NUMERICS
) -> VerificationReport:
    """catch_time(u, c d) = c catch_time(u, d) when the ledger is laid out for the true distance."""
    report = VerificationReport()
    for u in u_values:
        for c in scales:
            for side in SIDES:
                base = entry.catch_time(Target.of(numerics, u, 1, side), numerics=numerics)
                scaled = entry.catch_time(Target.of(numerics, u, c, side), numerics=numerics)
                params = {"strategy": entry.strategy_id, "u": u, "c": c, "side": side}
                report.add(linear_record("engine.d_scaling", params, -abs(scaled - c * base), numerics, scaled))
    return report


def sample_targets(
    log2_u_max: Real,
    samples: int,
    distances: List[int],
    seed: int,
    numerics: Numerics
) -> List[Target]:
    """u log-uniform in [1, 2^log2_u_max], cycling through distances and both sides."""
    rng = random.Random(seed)
    targets = []
    for j in range(samples):
        fraction = numerics.real(rng.random())
        u = numerics.exp2(fraction * log2_u_max)
        targets.append(Target(u, numerics.real(distances[j % len(distances)]), j % 2))
    return targets


def relative_difference(a: Real, b: Real) -> Real:
    scale = max(abs(a), abs(b))
    return abs(a - b) / scale if scale != 0 else abs(a - b)


def check_oracle_agreement(
    entry: CatalogEntry,
    samples: int = 200,
    seed: int = 0,
    distances: List[int] = (1, 2, 10),
    numerics: Numerics = DEFAULT_NUMERICS
) -> VerificationReport:
    """Analytic catch times against trajectory intersection for targets with u up to u_6."""
    report = VerificationReport()
    agreement = numerics.real(ORACLE_AGREEMENT)
    worst = {}
    missed = set()
    for target in sample_targets(entry.spec.log2_u(numerics, 6), samples, distances, seed, numerics):
        k = entry.catch_round(target, engine.DEFAULT_HORIZON, numerics)
        analytic = entry.catch_time(target, numerics=numerics)
        caught = intersect(entry.trajectory(target.d, k + 1, numerics), target, numerics)
        key = (int(target.d), target.side)
        if caught is None:
            missed.add(key)
            continue
        worst[key] = max(worst.get(key, numerics.zero()), relative_difference(caught.time, analytic))

    for key in sorted(set(worst) | missed):
        d, side = key
        params = {"strategy": entry.strategy_id, "d": d, "side": side, "samples": samples}
        if key in missed:
            report.add(flag_record("oracle.agreement", params, False, numerics))
        else:
            report.add(linear_record("oracle.agreement", params, agreement - worst[key], numerics))
    return report


def check_precision_stability(
    entry: CatalogEntry,
    i_max: int = 6,
    u_values: List[Number] = (2, 100, 10 ** 6, "1e30"),
    numerics: Numerics = DEFAULT_NUMERICS
) -> VerificationReport:
    """Engine outputs at p and 2p bits agree to relative 2^(-p/2)."""
    if i_max < 0:
        raise DomainError(f"i_max must be non-negative, got {i_max}")
    doubled = numerics.doubled()
    report = VerificationReport()
    allowed_log2 = numerics.real(-numerics.precision_bits) / 2

    def record(check_id, params, low, high):
        gap = relative_difference(doubled.real(low), high)
        margin = allowed_log2 - doubled.log2(gap) if gap != 0 else numerics.ctx.inf
        report.add(log2_record(check_id, params, numerics.real(margin), numerics))

    low_ledger = entry.ledger(entry.nominal_d, i_max + 1, numerics)
    high_ledger = entry.ledger(entry.nominal_d, i_max + 1, doubled)
    for i in range(i_max + 1):
        record("numerics.precision.s", {"strategy": entry.strategy_id, "i": i}, low_ledger.s[i], high_ledger.s[i])
    for u in u_values:
        record(
            "numerics.precision.cr",
            {"strategy": entry.strategy_id, "u": u},
            entry.competitive_ratio(u, entry.nominal_d, numerics=numerics),
            entry.competitive_ratio(u, entry.nominal_d, numerics=doubled)
        )
    return report
