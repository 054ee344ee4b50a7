from dataclasses import dataclass
from typing import Tuple

from catalog.entries import CatalogEntry, KnownDistanceEntry
from numerics.real import DEFAULT_NUMERICS, Number, Numerics, Real
from search.errors import DomainError
from zigzag.sequence import Log2Sequence, ZigzagSpec


@dataclass(frozen=True)
class Geometric:
    """u_i = base * ratio^i."""
    base: str
    ratio: str

    def __call__(self, numerics: Numerics, i: int) -> Real:
        return numerics.log2(self.base) + i * numerics.log2(self.ratio)


@dataclass(frozen=True)
class Log2Polynomial:
    """log2 u_i = c_0 + c_1 i + c_2 i^2 + ..."""
    coefficients: Tuple[str, ...]

    def __call__(self, numerics: Numerics, i: int) -> Real:
        return numerics.ctx.polyval([numerics.real(c) for c in reversed(self.coefficients)], i)


@dataclass(frozen=True)
class Log2Table:
    values: Tuple[str, ...]

    def __call__(self, numerics: Numerics, i: int) -> Real:
        return numerics.real(self.values[i])


def _numbers(kind: str, text: str) -> Tuple[str, ...]:
    values = tuple(part.strip() for part in text.split(",") if part.strip())
    if not values:
        raise DomainError(f"'{kind}' sequence needs at least one value")
    for value in values:
        try:
            DEFAULT_NUMERICS.real(value)
        except ValueError:
            raise DomainError(f"'{value}' in '{kind}' sequence is not a number")
    return values


def parse_sequence(description: str) -> ZigzagSpec:
    """Parses `geometric:base,ratio`, `log2poly:c0,c1,...` or `table:w0,w1,...`."""
    kind, _, body = description.partition(":")
    kind = kind.strip()
    values = _numbers(kind, body)

    if kind == "geometric":
        if len(values) != 2:
            raise DomainError(f"geometric sequence takes base,ratio, got {len(values)} values")
        if any(DEFAULT_NUMERICS.real(v) <= 0 for v in values):
            raise DomainError("geometric base and ratio must be positive")
        return ZigzagSpec(description, Geometric(*values))
    elif kind == "log2poly":
        return ZigzagSpec(description, Log2Polynomial(values))
    elif kind == "table":
        return ZigzagSpec(description, Log2Table(values), length=len(values))
    raise DomainError(f"unknown sequence kind '{kind}', expected geometric, log2poly or table")


def custom_sequence(
    sequence: str | Log2Sequence,
    d: Number = 1,
    name: str = "custom"
) -> CatalogEntry:
    """A strategy laid out for the true distance with a user-given sequence.

    Prefix conditions are checked when a consumer builds rounds from it.
    """
    if isinstance(sequence, str):
        spec = parse_sequence(sequence)
        description = f"custom sequence {sequence}"
    elif callable(sequence):
        spec = ZigzagSpec(name, sequence)
        description = f"custom sequence {name}"
    else:
        raise DomainError(f"cannot build a sequence from {type(sequence).__name__}")
    if DEFAULT_NUMERICS.real(d) < 1:
        raise DomainError(f"custom strategies require d >= 1, got {d}")
    return KnownDistanceEntry(spec.name, spec, description, nominal_d=d)
