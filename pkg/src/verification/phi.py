from numerics.real import DEFAULT_NUMERICS, Numerics, Real
from search.errors import DomainError
from verification.differences import SHIFTED_SQRT, finite_difference
from verification.records import VerificationReport, flag_record, linear_record


def phi(i: int, numerics: Numerics = DEFAULT_NUMERICS) -> Real:
    """3 f(i+1) - 3(i+3) f^<1>(i+1) + 3(i^2/2 + 5i/2 + 4) f^<2>(i+1) with f(n) = sqrt(n + 1)."""
    if i < 1:
        raise DomainError(f"phi is defined for i >= 1, got {i}")
    f = lambda n: finite_difference(SHIFTED_SQRT, n, i + 1, numerics)
    quadratic = numerics.ratio(i * i + 5 * i + 8, 2)
    return 3 * f(0) - 3 * (i + 3) * f(1) + 3 * quadratic * f(2)


def phi_closed_form_at_one(numerics: Numerics = DEFAULT_NUMERICS) -> Real:
    """12 sqrt(3) - 30 sqrt(2) + 21."""
    return 12 * numerics.sqrt(3) - 30 * numerics.sqrt(2) + 21


def phi_lower_bound(i: int, numerics: Numerics = DEFAULT_NUMERICS) -> Real:
    """(9/8) sqrt(i) - (51/8) i^(-1/2) - 3 i^(-3/2), below phi for every i >= 1."""
    if i < 1:
        raise DomainError(f"the bounding function is defined for i >= 1, got {i}")
    root = numerics.sqrt(i)
    return numerics.ratio(9, 8) * root - numerics.ratio(51, 8) / root - 3 / (i * root)


def check_phi(i_max: int = 100, numerics: Numerics = DEFAULT_NUMERICS) -> VerificationReport:
    if i_max < 5:
        raise DomainError(f"the phi scan needs i_max >= 5, got {i_max}")
    report = VerificationReport()
    minimum = phi(1, numerics)

    report.add(linear_record(
        "phi.closed_form",
        {"i": 1},
        -abs(minimum - phi_closed_form_at_one(numerics)),
        numerics
    ))

    values = {i: phi(i, numerics) for i in range(1, i_max + 1)}
    bounds = {i: phi_lower_bound(i, numerics) for i in range(1, i_max + 1)}

    margin = min(values[i] - minimum for i in values)
    report.add(linear_record("phi.minimum_at_one", {"i_max": i_max}, margin, numerics, i_max))

    margin = min(values[i] - bounds[i] for i in values)
    report.add(linear_record("phi.bounded_below", {"i_max": i_max}, margin, numerics, i_max))

    margin = min(bounds[i + 1] - bounds[i] for i in range(1, i_max))
    report.add(flag_record("phi.bound_increasing", {"i_max": i_max}, margin > 0, numerics, margin))

    report.add(flag_record("phi.bound_at_five", {"i": 5}, bounds[5] > minimum, numerics, bounds[5] - minimum))
    return report
