"""互素情形判据"""

from goodint.core.coprime_core import (
    CoprimeCriteria,
    exponent_set_coprime,
    is_good_coprime_direct,
    is_good_coprime_structural,
    order_certificate,
)

__all__ = [
    "CoprimeCriteria",
    "exponent_set_coprime",
    "is_good_coprime_direct",
    "is_good_coprime_structural",
    "order_certificate",
]
