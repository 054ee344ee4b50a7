from fractions import Fraction
from typing import Callable, Dict, List

from numerics.real import DEFAULT_NUMERICS, Numerics
from search.errors import DomainError
from verification.records import VerificationReport, flag_record

CLOSED_FORMS: Dict[int, Callable[[int], Fraction]] = {
    1: lambda n: Fraction(2 ** (n + 1) - 1),
    2: lambda n: Fraction(2 ** (n + 2) - n - 3),
    3: lambda n: 2 ** (n + 3) - Fraction(n * n, 2) - Fraction(7 * n, 2) - 7,
}


def g_sequence(k: int, n_max: int) -> List[int]:
    """g_0(j) = 2^j and g_k(n) = sum_{j <= n} g_{k-1}(j), for n = 0..n_max."""
    if k < 0 or n_max < 0:
        raise DomainError(f"k and n_max must be non-negative, got k={k}, n_max={n_max}")
    values = [2 ** j for j in range(n_max + 1)]
    for _ in range(k):
        running, sums = 0, []
        for value in values:
            running += value
            sums.append(running)
        values = sums
    return values


def check_g_sequences(n_max: int = 64, numerics: Numerics = DEFAULT_NUMERICS) -> VerificationReport:
    report = VerificationReport()
    for k, closed_form in CLOSED_FORMS.items():
        values = g_sequence(k, n_max)
        mismatches = [n for n, value in enumerate(values) if closed_form(n) != value]
        report.add(flag_record("g_sequence.closed_form", {"k": k, "n_max": n_max}, not mismatches, numerics))
    return report
