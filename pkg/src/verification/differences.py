from dataclasses import dataclass
from typing import Callable, Iterable
import logging as l

from numerics.real import DEFAULT_NUMERICS, Number, Numerics, Real
from search.errors import DomainError
from verification.records import CheckRecord, VerificationReport, flag_record, linear_record, log2_record


@dataclass(frozen=True)
class DiffOracle:
    """f(x) = sqrt(x + offset) with its closed-form derivatives and backward differences.

    f^<n>(x) = f^<n-1>(x) - f^<n-1>(x - 1), f^<0> = f.
    """
    offset: int = 0
    max_order: int = 8

    def _argument(self, numerics: Numerics, x: Number, a: int) -> Real:
        y = numerics.real(x) + self.offset
        if y < 0 or (a > 0 and y == 0):
            raise DomainError(f"f^({a}) is undefined at x = {x} with offset {self.offset}")
        return y

    def derivative(self, numerics: Numerics, a: int, x: Number) -> Real:
        """f^(a)(x) = (-1)^(a+1) (2a-2)! / ((a-1)! 2^(2a-1)) (x + offset)^(1/2 - a)."""
        if a < 0:
            raise DomainError(f"derivative order must be non-negative, got {a}")
        ctx = numerics.ctx
        y = self._argument(numerics, x, a)
        if a == 0:
            return ctx.sqrt(y)
        coefficient = ctx.factorial(2 * a - 2) / (ctx.factorial(a - 1) * ctx.ldexp(1, 2 * a - 1))
        return (-1) ** (a + 1) * coefficient * ctx.power(y, numerics.ratio(1, 2) - a)

    def mixed(self, numerics: Numerics, a: int, b: int, x: Number) -> Real:
        """f^(a)<b>(x): the b-th backward difference of the a-th derivative."""
        if b < 0 or b > self.max_order:
            raise DomainError(f"difference order must lie in [0, {self.max_order}], got {b}")
        x = numerics.real(x)
        self._argument(numerics, x - b, a)
        return self._difference(numerics, a, b, x)

    def _difference(self, numerics: Numerics, a: int, b: int, x: Real) -> Real:
        if b == 0:
            return self.derivative(numerics, a, x)
        return self._difference(numerics, a, b - 1, x) - self._difference(numerics, a, b - 1, x - 1)


SQRT = DiffOracle(0)
SHIFTED_SQRT = DiffOracle(1)


def abel_oracle(m: int) -> DiffOracle:
    """sqrt(n + max(1, m)): every difference an order-m decomposition needs is defined."""
    return DiffOracle(max(1, m))


def finite_difference(oracle: DiffOracle, n: int, x: Number, numerics: Numerics = DEFAULT_NUMERICS) -> Real:
    return oracle.mixed(numerics, 0, n, x)


def check_diff_bounds(
    oracle: DiffOracle,
    k: int,
    x_grid: Iterable[Number],
    numerics: Numerics = DEFAULT_NUMERICS
) -> VerificationReport:
    """(-1)^(k+1) f^(k)(x - k/2) <= (-1)^(k+1) f^<k>(x) <= (-1)^(k+1) f^(k)(x - k)."""
    if k < 1:
        raise DomainError(f"k must be at least 1, got {k}")
    points = [numerics.real(x) for x in x_grid]
    for x in points:
        if x + oracle.offset <= k:
            raise DomainError(f"difference bounds need x > {k - oracle.offset}, got {x}")

    report = VerificationReport()
    sign = (-1) ** (k + 1)
    for x in points:
        params = {"k": k, "x": x, "offset": oracle.offset}
        lower = sign * oracle.derivative(numerics, k, x - numerics.ratio(k, 2))
        middle = sign * oracle.mixed(numerics, 0, k, x)
        upper = sign * oracle.derivative(numerics, k, x - k)
        if middle <= 0:
            report.add(flag_record("diff.bounds.lower", params, False, numerics, middle))
            report.add(flag_record("diff.bounds.upper", params, False, numerics, middle))
            continue
        report.add(log2_record("diff.bounds.lower", params, numerics.log2(middle) - numerics.log2(lower), numerics))
        report.add(log2_record("diff.bounds.upper", params, numerics.log2(upper) - numerics.log2(middle), numerics))
    return report


def check_diff_positivity(
    oracle: DiffOracle,
    k: int,
    m: int,
    x_grid: Iterable[Number],
    numerics: Numerics = DEFAULT_NUMERICS
) -> VerificationReport:
    """(-1)^(k+1) f^(k-m)<m>(x) >= 0 for x > m."""
    if not 1 <= k <= 4:
        raise DomainError(f"k must lie in [1, 4], got {k}")
    if not 0 <= m <= k:
        raise DomainError(f"m must lie in [0, {k}], got {m}")
    points = [numerics.real(x) for x in x_grid]
    for x in points:
        if x + oracle.offset <= m:
            raise DomainError(f"positivity needs x > {m - oracle.offset}, got {x}")

    report = VerificationReport()
    for x in points:
        value = (-1) ** (k + 1) * oracle.mixed(numerics, k - m, m, x)
        margin_log2 = numerics.log2(abs(value)) if value != 0 else numerics.ctx.ninf
        passed = value >= 0
        if not passed:
            l.warning(f"Check diff.positivity failed for k={k}, m={m}, x={x}")
        report.add(CheckRecord("diff.positivity", {"k": k, "m": m, "x": x}, margin_log2, passed, numerics.precision_bits, value))
    return report


def check_abel_decomposition(
    g: Callable[[int], Number],
    oracle: DiffOracle,
    n: int,
    m: int,
    numerics: Numerics = DEFAULT_NUMERICS
) -> VerificationReport:
    """sum_j g(j) f^<m>(j) = G(n) f^<m>(n) - sum_{j<n} G(j) f^<m+1>(j+1), G partial sums of g."""
    if n < 0 or m < 0:
        raise DomainError(f"n and m must be non-negative, got n={n}, m={m}")
    if oracle.offset < m:
        raise DomainError(f"an order-{m} decomposition needs an offset of at least {m}, got {oracle.offset}")

    values = [numerics.real(g(j)) for j in range(n + 1)]
    partial_sums = []
    running = numerics.zero()
    for value in values:
        running += value
        partial_sums.append(running)

    lhs_terms = [values[j] * oracle.mixed(numerics, 0, m, j) for j in range(n + 1)]
    head = partial_sums[n] * oracle.mixed(numerics, 0, m, n)
    correction = [partial_sums[j] * oracle.mixed(numerics, 0, m + 1, j + 1) for j in range(n)]

    lhs = sum(lhs_terms, numerics.zero())
    rhs = head - sum(correction, numerics.zero())
    scale = sum((abs(term) for term in lhs_terms + correction), abs(head))
    difference = abs(lhs - rhs)

    report = VerificationReport()
    # The margin is judged against the summed magnitude of the terms.
    params = {"n": n, "m": m, "offset": oracle.offset, "tolerance": "relative", "scale": scale}
    report.add(linear_record("diff.abel", params, -difference, numerics, scale))
    report.notes[f"diff.abel.n{n}.m{m}.difference"] = difference
    return report
