from oracle.intersect import CatchResult, intersect, intersect_extending
from oracle.validity import ValidityReport, Violation, verify_strategy_validity
