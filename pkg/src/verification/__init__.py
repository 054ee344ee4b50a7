from verification.records import CheckRecord, VerificationReport
from verification.bounds import BoundSpec, unknown_distance_bound, upper_bound_log2
from verification.upper_bound import check_upper_bound, find_min_constant, h_trace
from verification.refutation import RefutationWitness, refute_polynomial_bound
from verification.beck_newman import BeckNewmanState, beck_newman_check
from verification.differences import (
    DiffOracle,
    check_abel_decomposition,
    check_diff_bounds,
    check_diff_positivity,
    finite_difference,
)
from verification.phi import phi, phi_lower_bound
from verification.unknown_distance import check_unknown_d_bound
from verification.suite import SUITES, SuiteOptions, run_suite
