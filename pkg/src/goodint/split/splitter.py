"""按素数集合分解整数，并把 L 拆成 g 部分与互素核心"""

from typing import Iterable, Tuple

from goodint.arith.integer_arith import factorize, gcd, is_prime
from goodint.exceptions import DomainError
from goodint.models import SplitContext


def lambda_split(n: int, primes: Iterable[int]) -> Tuple[int, int]:
    """
    按素数集合 S 分解 n = λ_S(n)·λ_S'(n)

    S 中不整除 n 的素数贡献因子 1。

    Args:
        n: 正整数
        primes: 素数集合 S，可以为空

    Returns:
        (λ_S(n), λ_S'(n))
    """
    if n < 1:
        raise DomainError(f"n 必须为正: {n}")
    chosen = set(primes)
    for p in chosen:
        if not is_prime(p):
            raise DomainError(f"集合中含有非素数: {p}")
    inside = 1
    for p, e in factorize(n):
        if p in chosen:
            inside *= p**e
    return inside, n // inside


def gamma(L: int, g: int) -> int:
    """
    阈值 γ(L) = max_{p|g} ⌈ν_p(L)/ν_p(g)⌉，g = 1 时为 0

    Args:
        L: 正整数
        g: 正整数

    Returns:
        非负整数 γ(L)
    """
    if L < 1 or g < 1:
        raise DomainError(f"L 与 g 必须为正: L={L}, g={g}")
    L_factors = factorize(L)
    best = 0
    for p, s in factorize(g):
        alpha = L_factors.exponent(p)
        best = max(best, (alpha + s - 1) // s)
    return best


def build_context(A: int, B: int, L: int) -> SplitContext:
    """
    算法第 1 步：提取 g = gcd(A, B)，拆分 L 并计算阈值

    Args:
        A: 非零整数
        B: 非零整数
        L: 正整数

    Returns:
        SplitContext对象
    """
    if A == 0 or B == 0:
        raise DomainError(f"A 与 B 必须非零: A={A}, B={B}")
    if L < 1:
        raise DomainError(f"L 必须为正: {L}")

    g = gcd(A, B)
    g_part, ell = lambda_split(L, factorize(g).primes)

    return SplitContext(
        A=A,
        B=B,
        L=L,
        g=g,
        a=A // g,
        b=B // g,
        g_part=g_part,
        ell=ell,
        gamma=gamma(L, g),
    )
