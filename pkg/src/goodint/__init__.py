"""goodint - 判定 L 是否整除某个 A^K + B^K"""

from goodint.models import GoodnessConfig, GoodnessVerdict, ExponentProgression, SplitContext
from goodint.core.coprime_core import CoprimeCriteria
from goodint.goodness.decider import decide, exponent_set, min_exponent, classify_special_case
from goodint.processor.batch_enumerator import GoodIntegerEnumerator, enumerate_good

__all__ = [
    "GoodnessConfig",
    "GoodnessVerdict",
    "ExponentProgression",
    "SplitContext",
    "CoprimeCriteria",
    "decide",
    "exponent_set",
    "min_exponent",
    "classify_special_case",
    "GoodIntegerEnumerator",
    "enumerate_good",
]

__version__ = "0.1.0"
