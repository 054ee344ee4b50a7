from fractions import Fraction
from typing import Any, Dict, List

from catalog.entries import CatalogEntry
from numerics.real import DEFAULT_NUMERICS, Numerics, Real
from search.errors import DomainError
from verification.bounds import SMALL_U_RATIO, BoundSpec
from verification.phi import phi
from verification.records import VerificationReport, flag_record, log2_record
from zigzag.engine import side_ratio_log2
from zigzag.ledger import RoundLedger

F_GRID_SAMPLES = 512


def _ledger(entry: CatalogEntry, i_max: int, numerics: Numerics) -> RoundLedger:
    if i_max < 1:
        raise DomainError(f"i_max must be at least 1, got {i_max}")
    entry.spec.validate_increasing(numerics, i_max + 2)
    return entry.ledger(entry.nominal_d, i_max + 2, numerics)


def _base_log2_u(ledger: RoundLedger, bound: BoundSpec, numerics: Numerics) -> Real:
    return max(ledger.log2_u[0], numerics.log2(bound.domain_min))


def check_f_increasing(bound: BoundSpec, log2_u_max: Real, numerics: Numerics = DEFAULT_NUMERICS) -> VerificationReport:
    """Samples F on a log-spaced grid of log2 u over (log2 domain_min, log2_u_max]."""
    ctx = numerics.ctx
    low = numerics.log2(bound.domain_min)
    if log2_u_max <= low:
        raise DomainError(f"grid end {log2_u_max} does not exceed log2 {bound.domain_min}")
    grid = [
        low * ctx.power(log2_u_max / low, numerics.ratio(j, F_GRID_SAMPLES))
        for j in range(F_GRID_SAMPLES + 1)
    ]
    values = [bound.log2_value(numerics, point) for point in grid]
    margin = min(b - a for a, b in zip(values, values[1:]))
    report = VerificationReport()
    report.add(flag_record("upper.f_increasing", {"samples": F_GRID_SAMPLES, "log2_u_max": log2_u_max}, margin > 0, numerics, margin))
    return report


def check_upper_bound(
    entry: CatalogEntry,
    bound: BoundSpec = BoundSpec(),
    i_max: int = 12,
    numerics: Numerics = DEFAULT_NUMERICS
) -> VerificationReport:
    """Key-point inequalities 1 + (2/d) s_{i+1} <= F(u_i) for 1 <= i <= i_max, in log2."""
    ledger = _ledger(entry, i_max, numerics)
    report = VerificationReport()

    for i in range(1, i_max + 1):
        lhs = side_ratio_log2(ledger, i + 2)
        rhs = bound.log2_value(numerics, ledger.log2_u[i])
        report.add(log2_record("upper.key_point", {"strategy": entry.strategy_id, "i": i}, rhs - lhs, numerics))

    base = _base_log2_u(ledger, bound, numerics)
    plateau = side_ratio_log2(ledger, 2)
    report.add(log2_record(
        "upper.base",
        {"strategy": entry.strategy_id, "log2_u": base},
        bound.log2_value(numerics, base) - plateau,
        numerics
    ))

    report.add(log2_record(
        "upper.small_u",
        {"strategy": entry.strategy_id, "ratio": SMALL_U_RATIO},
        numerics.log2(SMALL_U_RATIO) - side_ratio_log2(ledger, 1),
        numerics
    ))

    report.extend(check_f_increasing(bound, ledger.log2_u[i_max], numerics))
    return report


def find_min_constant(
    entry: CatalogEntry,
    bound: BoundSpec = BoundSpec(),
    i_max: int = 12,
    step: Fraction = Fraction(1, 100),
    numerics: Numerics = DEFAULT_NUMERICS
) -> Fraction:
    """Smallest multiple of `step` that passes the key-point and base checks up to i_max.

    Exploratory only: the grid and the finite horizon say nothing about the
    constant the asymptotic bound needs.
    """
    ledger = _ledger(entry, i_max, numerics)
    unit = bound.with_constant(Fraction(1))

    needed = [side_ratio_log2(ledger, i + 2) - unit.log2_value(numerics, ledger.log2_u[i]) for i in range(1, i_max + 1)]
    base = _base_log2_u(ledger, bound, numerics)
    needed.append(side_ratio_log2(ledger, 2) - unit.log2_value(numerics, base))

    c = numerics.exp2(max(needed))
    steps = int(numerics.ctx.ceil(c / numerics.ratio(step.numerator, step.denominator)))
    return steps * step


def h_trace(entry: CatalogEntry, i_max: int = 12, numerics: Numerics = DEFAULT_NUMERICS) -> List[Dict[str, Any]]:
    """H(i) = 4 log2 u_i - log2(1 + (2/d) s_{i+1}) next to its closed-form lower bound."""
    ledger = _ledger(entry, i_max, numerics)
    phi_min = phi(1, numerics)
    trace = []
    for i in range(1, i_max + 1):
        actual = 4 * ledger.log2_u[i] - side_ratio_log2(ledger, i + 2)
        lower = 3 * numerics.ctx.ldexp(1, i) * numerics.real(i + 1) ** numerics.ratio(-3, 2) - 2 - numerics.log2(9) + phi_min
        trace.append({"trace": "upper.h", "i": i, "h": actual, "lower_bound": lower})
    return trace
