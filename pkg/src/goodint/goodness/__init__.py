"""非互素情形判定"""

from goodint.goodness.decider import (
    classify_special_case,
    decide,
    exponent_set,
    lift_exponent,
    min_exponent,
    oracle_scan_bound,
)

__all__ = [
    "classify_special_case",
    "decide",
    "exponent_set",
    "lift_exponent",
    "min_exponent",
    "oracle_scan_bound",
]
