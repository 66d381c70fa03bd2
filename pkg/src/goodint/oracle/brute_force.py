"""暴力参照实现：逐个指数直接做模运算，不依赖任何判定代码"""

from goodint.arith.integer_arith import mod_pow
from goodint.exceptions import DomainError
from goodint.models import OracleReport


def divides_power_sum(A: int, B: int, L: int, K: int) -> bool:
    """L | A^K + B^K"""
    if L < 1 or K < 1:
        raise DomainError(f"L 与 K 必须为正: L={L}, K={K}")
    return (mod_pow(A, K, L) + mod_pow(B, K, L)) % L == 0


def scan_exponents(A: int, B: int, L: int, bound: int) -> OracleReport:
    """
    扫描 1..bound 内全部可行指数

    维护 A^K mod L 与 B^K mod L 两个滚动余数，每步各做一次模乘。

    Args:
        A: 整数
        B: 整数
        L: 正整数
        bound: 扫描上界

    Returns:
        OracleReport对象
    """
    if L < 1 or bound < 1:
        raise DomainError(f"L 与 bound 必须为正: L={L}, bound={bound}")
    a_step, b_step = A % L, B % L
    a_power, b_power = a_step, b_step
    admissible = []
    for k in range(1, bound + 1):
        if (a_power + b_power) % L == 0:
            admissible.append(k)
        a_power = a_power * a_step % L
        b_power = b_power * b_step % L
    return OracleReport(admissible=tuple(admissible), bound=bound)
