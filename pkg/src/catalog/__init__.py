from catalog.entries import (
    ALGORITHM1_SPEC,
    TRUE_DISTANCE,
    CatalogEntry,
    KnownDistanceEntry,
    PlannedDistanceEntry,
    algorithm1,
    algorithm2,
    resolve_strategy,
)
from catalog.custom import custom_sequence, parse_sequence
from catalog.reference import known_speed_known_distance_ratio, known_speed_unknown_distance_ratio
