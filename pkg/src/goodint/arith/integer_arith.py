"""整数运算基础：gcd、p进赋值、素性、分解、模幂、模逆、Carmichael函数、乘法阶"""

from functools import cache, lru_cache
from itertools import count
from math import gcd as _gcd, isqrt, lcm
from typing import Tuple

from sympy import primerange
from sympy.ntheory.primetest import isprime

from goodint.exceptions import DomainError, NotInvertibleError
from goodint.models import Factorization

# 试除上界，超过部分交给 Pollard rho
TRIAL_DIVISION_BOUND = 10**6


@cache
def _small_primes() -> Tuple[int, ...]:
    """试除用的素数表，首次调用时生成，之后只读"""
    return tuple(primerange(2, TRIAL_DIVISION_BOUND))


def gcd(x: int, y: int) -> int:
    """非负最大公约数，两者都为 0 时报错"""
    if x == 0 and y == 0:
        raise DomainError("gcd(0, 0) 无定义")
    return _gcd(x, y)


def is_prime(n: int) -> bool:
    """BPSW 素性检验，2^64 以下是确定性的"""
    return n >= 2 and bool(isprime(n))


def p_adic_valuation(p: int, n: int) -> int:
    """
    计算 p 进赋值 ν_p(n)

    Args:
        p: 素数
        n: 非零整数，按绝对值计算

    Returns:
        满足 p^e | n 的最大 e
    """
    if n == 0:
        raise DomainError("ν_p(0) 为无穷大")
    if not is_prime(p):
        raise DomainError(f"{p} 不是素数")
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def _pollard_rho_brent(n: int) -> int:
    """Brent 变体的 Pollard rho，返回 n 的一个非平凡因子（n 为奇合数）"""
    for c in count(1):
        y, r, q, g = 2, 1, 1, 1
        m = 128
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = _gcd(q, n)
                k += m
            r *= 2
        if g == n:
            # 批量乘积丢失了因子，逐步回退
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = _gcd(abs(x - ys), n)
        if g != n:
            return g


def _split_large(n: int, out: dict) -> None:
    """把试除后剩余的大因子分解到 out 中"""
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        root = isqrt(m)
        if root * root == m:
            stack.extend((root, root))
            continue
        d = _pollard_rho_brent(m)
        stack.extend((d, m // d))


@lru_cache(maxsize=8192)
def _factor_tuple(n: int) -> Tuple[Tuple[int, int], ...]:
    found: dict = {}
    rest = n
    for p in _small_primes():
        if p * p > rest:
            break
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            found[p] = e
    if rest > 1:
        if rest < TRIAL_DIVISION_BOUND**2:
            # 试除已经越过 sqrt(rest)，剩余部分必为素数
            found[rest] = found.get(rest, 0) + 1
        else:
            _split_large(rest, found)
    return tuple(sorted(found.items()))


def factorize(n: int) -> Factorization:
    """
    素因子分解

    先试除到 10^6，剩余合数部分用 Brent 变体的 Pollard rho 拆分。

    Args:
        n: 正整数

    Returns:
        Factorization对象，1 的分解为空
    """
    if n < 1:
        raise DomainError(f"只能分解正整数: {n}")
    return Factorization(_factor_tuple(n))


def prime_divisors(n: int) -> Tuple[int, ...]:
    return factorize(abs(n)).primes


def mod_pow(base: int, exp: int, m: int) -> int:
    """base^exp mod m，结果落在 [0, m)"""
    if m < 1:
        raise DomainError(f"模数必须为正: {m}")
    if exp < 0:
        raise DomainError(f"指数必须非负: {exp}")
    return pow(base % m, exp, m)


def mod_inv(a: int, m: int) -> int:
    """a 模 m 的逆元，结果落在 [0, m)"""
    if m < 1:
        raise DomainError(f"模数必须为正: {m}")
    d = _gcd(a, m)
    if d != 1:
        raise NotInvertibleError(a, m, d)
    return pow(a % m, -1, m)


def _prime_power_lambda(p: int, e: int) -> int:
    if p == 2:
        if e <= 2:
            return 1 << (e - 1)
        return 1 << (e - 2)
    return p ** (e - 1) * (p - 1)


def carmichael_lambda(m: int) -> int:
    """
    Carmichael 函数 λ(m)，即模 m 单位群的指数

    Args:
        m: 正整数

    Returns:
        λ(m)，λ(1) = 1
    """
    if m < 1:
        raise DomainError(f"模数必须为正: {m}")
    return lcm(1, *(_prime_power_lambda(p, e) for p, e in factorize(m)))


def multiplicative_order(a: int, m: int) -> int:
    """
    乘法阶 ord_m(a)

    从 λ(m) 出发，逐个剥离其素因子，只要剥离后仍有 a^t ≡ 1 就继续。

    Args:
        a: 与 m 互素的整数
        m: 正整数

    Returns:
        满足 a^t ≡ 1 (mod m) 的最小正整数 t
    """
    if m < 1:
        raise DomainError(f"模数必须为正: {m}")
    d = _gcd(a, m)
    if d != 1:
        raise NotInvertibleError(a, m, d)
    if m == 1:
        return 1
    return _order_of_residue(a % m, m)


@lru_cache(maxsize=65536)
def _order_of_residue(a: int, m: int) -> int:
    order = carmichael_lambda(m)
    for p, e in factorize(order):
        for _ in range(e):
            if pow(a, order // p, m) != 1:
                break
            order //= p
    return order


def order_lifting_exponent(a: int, p: int, r: int) -> int:
    """
    返回满足 ord_{p^r}(a) = ord_p(a)·p^i 的 i

    Args:
        a: 与 p 互素的整数
        p: 奇素数
        r: 正整数

    Returns:
        非负整数 i
    """
    if p == 2 or not is_prime(p):
        raise DomainError(f"{p} 不是奇素数")
    if r < 1:
        raise DomainError(f"幂次必须为正: {r}")
    low = multiplicative_order(a, p)
    high = multiplicative_order(a, p**r)
    ratio, rem = divmod(high, low)
    if rem:
        raise DomainError(f"ord_{p}^{r}({a}) 不是 ord_{p}({a}) 的倍数")
    i = p_adic_valuation(p, ratio)
    if p**i != ratio:
        raise DomainError(f"ord_{p}^{r}({a}) / ord_{p}({a}) 不是 {p} 的幂")
    return i

