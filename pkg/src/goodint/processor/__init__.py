"""批量枚举"""

from goodint.processor.batch_enumerator import GoodIntegerEnumerator, enumerate_good

__all__ = ["GoodIntegerEnumerator", "enumerate_good"]
