from dataclasses import dataclass, field
from typing import Any, Dict, List
import logging as l

from numerics.real import Numerics, Real
from numerics.rendering import render


@dataclass(frozen=True)
class CheckRecord:
    """One certified inequality: passes when its margin clears -2^-(p - 16).

    `margin_log2` is the log2-domain slack of ratio inequalities; additive and
    sign checks put their slack in `margin` instead.
    """
    check_id: str
    params: Dict[str, Any]
    margin_log2: Real | None
    passed: bool
    precision_bits: int
    margin: Real | None = None

    def to_json(self) -> Dict[str, Any]:
        return {
            "check_id": self.check_id,
            "params": {key: _json_value(value) for key, value in self.params.items()},
            "margin_log2": None if self.margin_log2 is None else render(self.margin_log2),
            "margin": None if self.margin is None else render(self.margin),
            "pass": self.passed,
            "precision_bits": self.precision_bits,
        }


def _json_value(value: Any) -> Any:
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    if hasattr(value, "context"):
        return render(value)
    return str(value)


def log2_record(check_id: str, params: Dict[str, Any], margin_log2: Real, numerics: Numerics) -> CheckRecord:
    passed = margin_log2 >= -numerics.tolerance()
    if not passed:
        l.warning(f"Check {check_id} {params} failed with log2 margin {render(margin_log2)}")
    return CheckRecord(check_id, params, margin_log2, passed, numerics.precision_bits)


def linear_record(
    check_id: str,
    params: Dict[str, Any],
    margin: Real,
    numerics: Numerics,
    scale: Real | int = 1
) -> CheckRecord:
    """Additive inequality `margin >= 0`, tolerant to rounding relative to `scale`."""
    passed = margin >= -numerics.tolerance() * max(abs(numerics.real(scale)), 1)
    if not passed:
        l.warning(f"Check {check_id} {params} failed with margin {render(margin)}")
    return CheckRecord(check_id, params, None, passed, numerics.precision_bits, margin)


def flag_record(check_id: str, params: Dict[str, Any], passed: bool, numerics: Numerics, margin: Real | None = None) -> CheckRecord:
    if not passed:
        l.warning(f"Check {check_id} {params} failed")
    return CheckRecord(check_id, params, None, passed, numerics.precision_bits, margin)


@dataclass
class VerificationReport:
    records: List[CheckRecord] = field(default_factory=list)
    diagnostics: List[Dict[str, Any]] = field(default_factory=list)
    notes: Dict[str, Any] = field(default_factory=dict)
    elapsed: float = 0.0

    def add(self, record: CheckRecord):
        self.records.append(record)

    def extend(self, other: 'VerificationReport'):
        self.records.extend(other.records)
        self.diagnostics.extend(other.diagnostics)
        self.notes.update(other.notes)

    @property
    def passed(self) -> bool:
        return all(record.passed for record in self.records)

    def failures(self) -> List[CheckRecord]:
        return [record for record in self.records if not record.passed]

    def compute_pass_count(self) -> int:
        return len(self.records) - len(self.failures())

    def to_json(self) -> Dict[str, Any]:
        return {
            "pass": self.passed,
            "records": [record.to_json() for record in self.records],
            "diagnostics": [
                {key: _json_value(value) for key, value in entry.items()}
                for entry in self.diagnostics
            ],
            "notes": {key: _json_value(value) for key, value in self.notes.items()},
        }

    def print_stats(self, stream):
        print(f"Checks: {len(self.records)}", file=stream)
        print(f"Passed: {self.compute_pass_count()}", file=stream)
        print(f"Failed: {len(self.failures())}", file=stream)
        print(f"Time taken: {self.elapsed:.2f} seconds", file=stream)
