from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import List

from numerics.real import DEFAULT_NUMERICS, Number, Numerics, Real
from search.errors import DomainError
from search.target import SIDES, Target
from search.trajectory import Trajectory
from zigzag import engine
from zigzag.ledger import RoundLedger, compute_rounds
from zigzag.sequence import ZigzagSpec


def algorithm1_log2_u(numerics: Numerics, i: int) -> Real:
    """log2 u_i = 3 * 2^i * sqrt(i + 1) - 1."""
    ctx = numerics.ctx
    return 3 * ctx.ldexp(ctx.sqrt(i + 1), i) - 1


ALGORITHM1_SPEC = ZigzagSpec("algorithm-1", algorithm1_log2_u)

TRUE_DISTANCE = "true-d"


@dataclass(frozen=True)
class CatalogEntry(ABC):
    """A named strategy: a zigzag sequence plus the distance it is laid out for."""
    strategy_id: str
    spec: ZigzagSpec
    description: str
    nominal_d: Number = 1

    @abstractmethod
    def planning_distance(self, target_d: Number) -> Number:
        pass

    @abstractmethod
    def catch_round(self, target: Target, horizon: int, numerics: Numerics) -> int:
        pass

    def ledger(self, target_d: Number, n_rounds: int, numerics: Numerics = DEFAULT_NUMERICS) -> RoundLedger:
        return compute_rounds(self.spec, numerics.real(self.planning_distance(target_d)), n_rounds, numerics)

    def trajectory(self, target_d: Number, n_rounds: int, numerics: Numerics = DEFAULT_NUMERICS) -> Trajectory:
        return engine.trajectory(self.spec, self.planning_distance(target_d), n_rounds, numerics)

    def catch_time(
        self,
        target: Target,
        horizon: int = engine.DEFAULT_HORIZON,
        numerics: Numerics = DEFAULT_NUMERICS
    ) -> Real:
        target = target.at(numerics)
        k = self.catch_round(target, horizon, numerics)
        ledger = self.ledger(target.d, max(k, 1), numerics)
        return target.u * target.d + 2 * target.u * ledger.cumulative(k - 1)

    def side_ratio_log2(
        self,
        target: Target,
        horizon: int = engine.DEFAULT_HORIZON,
        numerics: Numerics = DEFAULT_NUMERICS
    ) -> Real:
        return numerics.log2(self.catch_time(target, horizon, numerics) / target.at(numerics).opt_time())

    def competitive_ratio(
        self,
        u: Number,
        d: Number,
        horizon: int = engine.DEFAULT_HORIZON,
        numerics: Numerics = DEFAULT_NUMERICS
    ) -> Real:
        targets = [Target.of(numerics, u, d, side) for side in SIDES]
        return max(self.catch_time(t, horizon, numerics) / t.opt_time() for t in targets)


@dataclass(frozen=True)
class KnownDistanceEntry(CatalogEntry):
    """Laid out for the target's true distance."""

    @property
    def assumed_d(self) -> str:
        return TRUE_DISTANCE

    def planning_distance(self, target_d: Number) -> Number:
        return target_d

    def catch_round(self, target: Target, horizon: int, numerics: Numerics) -> int:
        return engine.catch_round(self.spec, target.u, target.side, horizon, numerics)

    def competitive_ratio(self, u, d, horizon=engine.DEFAULT_HORIZON, numerics=DEFAULT_NUMERICS) -> Real:
        return engine.competitive_ratio(self.spec, u, d, horizon, numerics)


@dataclass(frozen=True)
class PlannedDistanceEntry(CatalogEntry):
    """Laid out for a fixed distance regardless of where the target starts."""
    assumed_d: int = 1

    def planning_distance(self, target_d: Number) -> Number:
        return self.assumed_d

    def catch_round(self, target: Target, horizon: int, numerics: Numerics) -> int:
        target = target.at(numerics)
        if target.d < self.assumed_d:
            raise DomainError(f"{self.strategy_id} needs d >= {self.assumed_d}, got {target.d}")
        return engine.catch_round_for_distance(self.spec, target, self.assumed_d, horizon, numerics)


def algorithm1(d: Number = 1) -> CatalogEntry:
    if DEFAULT_NUMERICS.real(d) < 1:
        raise DomainError(f"algorithm-1 requires d >= 1, got {d}")
    return KnownDistanceEntry(
        "algorithm-1",
        ALGORITHM1_SPEC,
        "zigzag with log2 u_i = 3 * 2^i * sqrt(i + 1) - 1, laid out for the true distance",
        nominal_d=d
    )


def algorithm2() -> CatalogEntry:
    return PlannedDistanceEntry(
        "algorithm-2",
        ALGORITHM1_SPEC,
        "the same turning sequence laid out for d = 1; needs only d >= 1",
        assumed_d=1
    )


STRATEGY_ALIASES = {
    "alg1": "algorithm-1",
    "algorithm1": "algorithm-1",
    "alg2": "algorithm-2",
    "algorithm2": "algorithm-2",
}


def strategy_ids() -> List[str]:
    return ["algorithm-1", "algorithm-2"]


def resolve_strategy(strategy_id: str, d: Number = 1) -> CatalogEntry:
    """Looks up a strategy by id; anything with a ':' is parsed as a custom sequence."""
    from catalog.custom import custom_sequence

    name = STRATEGY_ALIASES.get(strategy_id, strategy_id)
    if name == "algorithm-1":
        return algorithm1(d)
    elif name == "algorithm-2":
        return algorithm2()
    elif ":" in name:
        return custom_sequence(name, d)
    raise DomainError(f"unknown strategy '{strategy_id}', expected one of {strategy_ids()} or a custom sequence")
