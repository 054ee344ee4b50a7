from zigzag.sequence import Log2Sequence, ZigzagSpec
from zigzag.ledger import RoundLedger, compute_rounds
from zigzag.engine import (
    DEFAULT_HORIZON,
    catch_round,
    catch_round_for_distance,
    catch_round_log2,
    catch_time,
    catch_time_for_distance,
    catch_time_log2,
    competitive_ratio,
    competitive_ratio_log2,
    side_ratio,
    side_ratio_log2,
    trajectory,
)
