from numerics.real import Number, Numerics, Real
from search.errors import DomainError


def _evasiveness(numerics: Numerics, u: Number) -> Real:
    u = numerics.real(u)
    if u < 1:
        raise DomainError(f"evasiveness must be at least 1, got {u}")
    return u


def known_speed_known_distance_ratio(numerics: Numerics, u: Number) -> Real:
    """1 + 2/(1 - v), i.e. 1 + 2u."""
    return 1 + 2 * _evasiveness(numerics, u)


def known_speed_unknown_distance_ratio(numerics: Numerics, u: Number) -> Real:
    """1 + 8(1 + v)/(1 - v)^2, which in terms of u is 1 + 8u(2u - 1)."""
    u = _evasiveness(numerics, u)
    return 1 + 8 * u * (2 * u - 1)
