from dataclasses import dataclass
import logging as l

from catalog.entries import CatalogEntry
from numerics.log2_real import Log2Real, log_sum
from numerics.real import DEFAULT_NUMERICS, Number, Numerics, Real
from numerics.rendering import render
from verification.records import VerificationReport, flag_record, log2_record
from search.errors import DomainError
from zigzag.engine import side_ratio_log2


@dataclass(frozen=True)
class RefutationWitness:
    """A test point u_star = alpha_i u_i where the ratio exceeds a * u_star^k."""
    round_index: int
    u_star_log2: Real
    cr_log2: Real
    bound_log2: Real

    @property
    def margin_log2(self) -> Real:
        return self.cr_log2 - self.bound_log2

    def u_star(self, numerics: Numerics) -> Real:
        return numerics.exp2(self.u_star_log2)


def refute_polynomial_bound(
    entry: CatalogEntry,
    a: Number,
    k: Number,
    i_max: int = 40,
    exact: bool = False,
    numerics: Numerics = DEFAULT_NUMERICS
) -> RefutationWitness | None:
    """First round i <= i_max at which CR <= a u^k visibly fails.

    The ratio at u_star is bounded below by 1 + 2 prod_{n <= i+1} u_n, or by
    the exact 1 + (2/d) s_{i+1} when `exact` is set.
    """
    a, k = numerics.real(a), numerics.real(k)
    if k >= 4:
        raise DomainError(f"polynomial bounds with k >= 4 cannot be refuted, got k={k}")
    if a <= 0 or k <= 0:
        raise DomainError(f"a and k must be positive, got a={a}, k={k}")
    if i_max < 0:
        raise DomainError(f"i_max must be non-negative, got {i_max}")

    entry.spec.validate_prefix(numerics, i_max + 3)
    log2_u = [entry.spec.log2_u(numerics, i) for i in range(i_max + 3)]
    ledger = entry.ledger(entry.nominal_d, i_max + 2, numerics) if exact else None
    log2_a = numerics.log2(a)

    product_log2 = log2_u[0]
    for i in range(i_max + 1):
        product_log2 += log2_u[i + 1]
        log2_alpha = min(log2_u[i + 2] - log2_u[i], 1 / k)
        u_star_log2 = log2_u[i] + log2_alpha

        if exact:
            cr_log2 = side_ratio_log2(ledger, i + 2)
        else:
            cr_log2 = log_sum(Log2Real(numerics.zero()), Log2Real(1 + product_log2)).log2_magnitude
        bound_log2 = log2_a + k * u_star_log2

        if cr_log2 > bound_log2:
            l.debug(f"Refuted a={render(a)}, k={render(k)} at round {i}")
            return RefutationWitness(i, u_star_log2, cr_log2, bound_log2)

    l.info(f"No witness against a={render(a)}, k={render(k)} within {i_max} rounds")
    return None


REFUTATION_A_GRID = (1, 10 ** 3, 10 ** 6)
REFUTATION_K_GRID = ("1", "2", "3", "3.5", "3.9")


def check_refutation_grid(
    entry: CatalogEntry,
    a_values=REFUTATION_A_GRID,
    k_values=REFUTATION_K_GRID,
    i_max: int = 40,
    numerics: Numerics = DEFAULT_NUMERICS
) -> VerificationReport:
    """A witness must exist for every (a, k) pair; the exact-sum variant is checked alongside."""
    report = VerificationReport()
    for a in a_values:
        for k in k_values:
            for exact in (False, True):
                params = {"strategy": entry.strategy_id, "a": a, "k": k, "i_max": i_max, "exact": exact}
                witness = refute_polynomial_bound(entry, a, k, i_max, exact, numerics)
                if witness is None:
                    report.add(flag_record("lower.refutation", params, False, numerics))
                    continue
                report.add(log2_record("lower.refutation", {**params, "round": witness.round_index}, witness.margin_log2, numerics))
    return report
