from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from typing import Callable, Dict, List
from timeit import default_timer as timer
import logging as l
import tqdm

from catalog.entries import ALGORITHM1_SPEC, algorithm1
from numerics.real import Numerics
from search.errors import DomainError
from verification.beck_newman import BeckNewmanState, beck_newman_check
from verification.bounds import BoundSpec
from verification.differences import SQRT, abel_oracle, check_abel_decomposition, check_diff_bounds, check_diff_positivity
from verification.invariants import (
    check_d_scaling,
    check_lower_bound_family,
    check_oracle_agreement,
    check_precision_stability,
    check_product_sandwich,
    check_recurrence,
)
from verification.phi import check_phi
from verification.records import CheckRecord, VerificationReport, flag_record
from verification.refutation import check_refutation_grid
from verification.sequences import check_g_sequences
from verification.unknown_distance import check_unknown_d_bound, check_unknown_d_grid
from verification.upper_bound import check_upper_bound, h_trace

Check = Callable[[Numerics], VerificationReport]

SUITES = ("all", "upper", "lower", "diff", "unknown_d")

BECK_NEWMAN_H = "3.9"
DIFF_GRID_POINTS = 50
ABEL_CASES = ((0, 0), (5, 0), (5, 1), (32, 0), (32, 1), (32, 2))


@dataclass(frozen=True)
class SuiteOptions:
    i_max: int = 12
    a: str | None = None
    k: str | None = None
    x: str | None = None


def _upper_checks(options: SuiteOptions) -> Dict[str, Check]:
    entry = algorithm1()

    def upper_bound(numerics: Numerics) -> VerificationReport:
        report = check_upper_bound(entry, BoundSpec(), options.i_max, numerics)
        report.diagnostics.extend(h_trace(entry, options.i_max, numerics))
        return report

    return {
        "upper.algorithm1": upper_bound,
        "upper.phi": lambda numerics: check_phi(100, numerics),
        "upper.g_sequences": lambda numerics: check_g_sequences(64, numerics),
        "engine.recurrence": lambda numerics: check_recurrence(entry, 20, numerics),
        "engine.sandwich": lambda numerics: check_product_sandwich(entry, 20, numerics),
        "engine.d_scaling": lambda numerics: check_d_scaling(entry, numerics=numerics),
        "oracle.agreement": lambda numerics: check_oracle_agreement(entry, numerics=numerics),
        "numerics.precision": lambda numerics: check_precision_stability(entry, numerics=numerics),
    }


def _lower_checks(options: SuiteOptions) -> Dict[str, Check]:
    entry = algorithm1()
    if (options.a is None) != (options.k is None):
        raise DomainError("--a and --k must be given together")

    def refutation(numerics: Numerics) -> VerificationReport:
        if options.a is not None:
            return check_refutation_grid(entry, (options.a,), (options.k,), 40, numerics)
        return check_refutation_grid(entry, i_max=40, numerics=numerics)

    def beck_newman_strategy(numerics: Numerics) -> VerificationReport:
        state = BeckNewmanState.from_strategy(ALGORITHM1_SPEC, BECK_NEWMAN_H, options.i_max + 3, numerics)
        return beck_newman_check(state, 1, options.i_max, numerics)

    def beck_newman_constant(numerics: Numerics) -> VerificationReport:
        state = BeckNewmanState.of(numerics, [1] * (options.i_max + 3), BECK_NEWMAN_H)
        report = beck_newman_check(state, 0, options.i_max, numerics)
        report.notes = {"beck_newman.constant.first_condition_failure": report.notes["beck_newman.first_condition_failure"]}
        return report

    return {
        "lower.refutation": refutation,
        "lower.beck_newman.algorithm1": beck_newman_strategy,
        "lower.beck_newman.constant": beck_newman_constant,
        "lower.family": lambda numerics: check_lower_bound_family(entry, 10, numerics),
    }


def _diff_checks(options: SuiteOptions) -> Dict[str, Check]:
    orders = [int(options.k)] if options.k is not None else [1, 2, 3, 4]
    checks: Dict[str, Check] = {}

    def grid(numerics: Numerics, above: int):
        if options.x is not None:
            return [numerics.real(options.x)]
        return [numerics.real(above + j) for j in range(1, DIFF_GRID_POINTS + 1)]

    for k in orders:
        checks[f"diff.bounds.k{k}"] = lambda numerics, k=k: check_diff_bounds(SQRT, k, grid(numerics, k), numerics)
        if k <= 4:
            def positivity(numerics: Numerics, k=k) -> VerificationReport:
                report = VerificationReport()
                for m in range(k + 1):
                    report.extend(check_diff_positivity(SQRT, k, m, grid(numerics, m), numerics))
                return report
            checks[f"diff.positivity.k{k}"] = positivity

    def abel(numerics: Numerics) -> VerificationReport:
        report = VerificationReport()
        for n, m in ABEL_CASES:
            report.extend(check_abel_decomposition(lambda j: 2 ** j, abel_oracle(m), n, m, numerics))
        return report

    checks["diff.abel"] = abel
    return checks


def _unknown_d_checks(options: SuiteOptions) -> Dict[str, Check]:
    def examples(numerics: Numerics) -> VerificationReport:
        report = VerificationReport()
        for u, d in ((2, 2), (1, 1), (3, 5)):
            report.extend(check_unknown_d_bound(u, d, numerics=numerics))
        return report

    return {
        "unknown_d.examples": examples,
        "unknown_d.grid": lambda numerics: check_unknown_d_grid(numerics=numerics),
    }


def build_checks(suite: str, options: SuiteOptions = SuiteOptions()) -> Dict[str, Check]:
    if suite not in SUITES:
        raise DomainError(f"unknown suite '{suite}', expected one of {SUITES}")
    builders = {
        "upper": _upper_checks,
        "lower": _lower_checks,
        "diff": _diff_checks,
        "unknown_d": _unknown_d_checks,
    }
    if suite != "all":
        return builders[suite](options)
    # --k and --x pick the difference order and point only when the diff suite runs alone
    checks: Dict[str, Check] = {}
    for name, builder in builders.items():
        checks.update(builder(SuiteOptions(options.i_max) if name == "diff" else options))
    return checks


@dataclass
class SuiteRunner:
    max_workers: int = 7
    confirm: bool = True

    def run(self, suite: str, numerics: Numerics, options: SuiteOptions = SuiteOptions()) -> VerificationReport:
        """Runs a suite at `numerics` and, when confirming, again at twice the precision.

        A record passes only if it passes at both precisions.
        """
        checks = build_checks(suite, options)
        start = timer()
        reports = self.run_checks(checks, numerics)
        if self.confirm:
            confirmations = self.run_checks(checks, numerics.doubled())
            reports = {name: _confirm(reports[name], confirmations[name], numerics) for name in reports}
        end = timer()

        report = VerificationReport()
        for name in sorted(reports):
            report.extend(reports[name])
        report.elapsed = end - start
        l.info(f"Suite {suite} ran {len(report.records)} checks in {report.elapsed:.2f} seconds")
        return report

    def run_checks(self, checks: Dict[str, Check], numerics: Numerics) -> Dict[str, VerificationReport]:
        results: Dict[str, VerificationReport] = {}
        progress_bar = tqdm.tqdm(total=len(checks), desc=f"Checks ({numerics.precision_bits} bits)", position=0)

        if self.max_workers == 0:
            for name, check in checks.items():
                results[name] = check(numerics)
                progress_bar.update(1)
        else:
            with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
                future_to_name = {executor.submit(check, numerics): name for name, check in checks.items()}
                for future in as_completed(future_to_name):
                    results[future_to_name[future]] = future.result()
                    progress_bar.update(1)

        progress_bar.close()
        return results


def _confirm(primary: VerificationReport, confirmation: VerificationReport, numerics: Numerics) -> VerificationReport:
    if [r.check_id for r in primary.records] != [r.check_id for r in confirmation.records]:
        primary.add(flag_record("suite.confirmation", {"precision_bits": 2 * numerics.precision_bits}, False, numerics))
        return primary
    merged: List[CheckRecord] = []
    for record, check in zip(primary.records, confirmation.records):
        if record.passed and not check.passed:
            l.warning(f"Check {record.check_id} {record.params} failed at {check.precision_bits} bits")
        merged.append(CheckRecord(
            record.check_id,
            record.params,
            record.margin_log2,
            record.passed and check.passed,
            record.precision_bits,
            record.margin
        ))
    primary.records = merged
    return primary


def run_suite(
    suite: str,
    precision_bits: int,
    options: SuiteOptions = SuiteOptions(),
    max_workers: int = 7,
    confirm: bool = True
) -> VerificationReport:
    return SuiteRunner(max_workers, confirm).run(suite, Numerics.at(precision_bits), options)
