from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List
import logging as l
import tqdm

from catalog.entries import CatalogEntry, KnownDistanceEntry, resolve_strategy
from catalog.reference import known_speed_known_distance_ratio, known_speed_unknown_distance_ratio
from experiments.config import DEFAULT_HORIZON, DEFAULT_SAMPLES, MAX_LINEAR_LOG2, default_precision_bits
from numerics.real import Numerics, Real
from numerics.rendering import render
from search.errors import DomainError, HorizonExhaustedError
from search.target import SIDES, Target
from verification.bounds import unknown_distance_bound, upper_bound_log2

SCALES = ("log", "linear")

LOG2_HEADER = ["u", "d", "side", "catch_round", "catch_time_log2", "opt_time_log2", "cr_log2", "bound_F_log2", "slack_log2"]
LINEAR_HEADER = ["u", "d", "side", "catch_round", "catch_time", "opt_time", "cr", "bound_F", "slack"]
# Appended when the sweep also reports the known-speed reference ratio.
REFERENCE_LOG2_HEADER = ["ref_cr_log2", "cr_over_ref_log2"]
REFERENCE_LINEAR_HEADER = ["ref_cr", "cr_over_ref"]


@dataclass(frozen=True)
class SweepConfig:
    strategy_id: str = "algorithm-1"
    d: str = "1"
    u_min: str = "1"
    u_max: str = "1000"
    samples: int = DEFAULT_SAMPLES
    scale: str = "log"
    precision_bits: int = 256
    horizon: int = DEFAULT_HORIZON
    reference: bool = False

    def __post_init__(self):
        numerics = self.numerics()
        if numerics.real(self.u_min) < 1:
            raise DomainError(f"u_min must be at least 1, got {self.u_min}")
        if numerics.real(self.u_max) <= numerics.real(self.u_min):
            raise DomainError(f"u_max must exceed u_min, got [{self.u_min}, {self.u_max}]")
        if self.samples < 2:
            raise DomainError(f"a sweep needs at least 2 samples, got {self.samples}")
        if self.scale not in SCALES:
            raise DomainError(f"scale must be one of {SCALES}, got '{self.scale}'")
        if numerics.real(self.d) < 1:
            raise DomainError(f"d must be at least 1, got {self.d}")
        if self.horizon < 1:
            raise DomainError(f"horizon must be at least 1, got {self.horizon}")

    @staticmethod
    def with_defaults(**kwargs) -> 'SweepConfig':
        return SweepConfig(**{"precision_bits": default_precision_bits(), **kwargs})

    def numerics(self) -> Numerics:
        return Numerics.at(self.precision_bits)

    def grid(self) -> List[Real]:
        """Sample points with exact endpoints."""
        numerics = self.numerics()
        low, high = numerics.real(self.u_min), numerics.real(self.u_max)
        last = self.samples - 1
        points = []
        for j in range(self.samples):
            if j == 0:
                points.append(low)
            elif j == last:
                points.append(high)
            elif self.scale == "log":
                points.append(low * numerics.ctx.power(high / low, numerics.ratio(j, last)))
            else:
                points.append(low + (high - low) * numerics.ratio(j, last))
        return points


@dataclass(frozen=True)
class SweepRow:
    u: Real
    d: Real
    side: int
    catch_round: int | None
    catch_time_log2: Real | None
    opt_time_log2: Real
    cr_log2: Real | None
    bound_log2: Real | None
    slack_log2: Real | None
    reference_log2: Real | None = None

    def fields(self, linear: bool = False, reference: bool = False) -> List[str]:
        logs = [self.catch_time_log2, self.opt_time_log2, self.cr_log2, self.bound_log2, self.slack_log2]
        if reference:
            over = None if self.cr_log2 is None or self.reference_log2 is None else self.cr_log2 - self.reference_log2
            logs += [self.reference_log2, over]
        return [
            render(self.u),
            render(self.d),
            str(self.side),
            "" if self.catch_round is None else str(self.catch_round),
        ] + [_render_log2(value, linear) for value in logs]


def _render_log2(value: Real | None, linear: bool) -> str:
    if value is None:
        return ""
    if not linear:
        return render(value)
    if value > MAX_LINEAR_LOG2:
        return ""
    return render(value.context.power(2, value))


def _bound_log2(entry: CatalogEntry, numerics: Numerics, u: Real, d: Real) -> Real:
    if isinstance(entry, KnownDistanceEntry):
        return upper_bound_log2(numerics, u)
    return numerics.log2(unknown_distance_bound(numerics, u, d))


def _reference_log2(entry: CatalogEntry, numerics: Numerics, u: Real) -> Real:
    """What a searcher who knew the speed would achieve with the same knowledge of d."""
    if isinstance(entry, KnownDistanceEntry):
        return numerics.log2(known_speed_known_distance_ratio(numerics, u))
    return numerics.log2(known_speed_unknown_distance_ratio(numerics, u))


def sweep_point(entry: CatalogEntry, config: SweepConfig, u: Real) -> List[SweepRow]:
    numerics = config.numerics()
    d = numerics.real(config.d)
    opt_log2 = numerics.log2(u * d)

    times = {}
    for side in SIDES:
        target = Target(u, d, side)
        try:
            times[side] = (entry.catch_round(target, config.horizon, numerics), entry.catch_time(target, config.horizon, numerics))
        except HorizonExhaustedError as e:
            l.warning(f"Sweep point u={render(u)} on side {side}: {e}")
            times[side] = None

    cr_log2 = None
    if all(times.values()):
        cr_log2 = max(numerics.log2(time) for _, time in times.values()) - opt_log2
    bound = _bound_log2(entry, numerics, u, d)
    slack = None if cr_log2 is None else bound - cr_log2
    reference = _reference_log2(entry, numerics, u) if config.reference else None

    rows = []
    for side in SIDES:
        k, time = times[side] if times[side] else (None, None)
        rows.append(SweepRow(
            u, d, side, k,
            None if time is None else numerics.log2(time),
            opt_log2, cr_log2, bound, slack, reference
        ))
    return rows


def sweep(config: SweepConfig, max_workers: int = 0) -> List[SweepRow]:
    """Rows per (u, side) in grid order."""
    entry = resolve_strategy(config.strategy_id, config.d)
    points = config.grid()
    progress_bar = tqdm.tqdm(total=len(points), desc="Sweep", position=0)

    def run(u: Real) -> List[SweepRow]:
        rows = sweep_point(entry, config, u)
        progress_bar.update(1)
        return rows

    if max_workers == 0:
        results = [run(u) for u in points]
    else:
        with ThreadPoolExecutor(max_workers=max_workers) as executor:
            results = list(executor.map(run, points))
    progress_bar.close()

    return [row for rows in results for row in rows]


def header(linear: bool = False, reference: bool = False) -> List[str]:
    columns = LINEAR_HEADER if linear else LOG2_HEADER
    if reference:
        columns = columns + (REFERENCE_LINEAR_HEADER if linear else REFERENCE_LOG2_HEADER)
    return columns
