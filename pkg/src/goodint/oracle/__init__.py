"""暴力参照实现"""

from goodint.oracle.brute_force import divides_power_sum, scan_exponents

__all__ = ["divides_power_sum", "scan_exponents"]
