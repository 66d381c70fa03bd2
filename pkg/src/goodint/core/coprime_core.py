"""互素情形的好整数判据"""

from typing import Optional, Tuple

from goodint.arith.integer_arith import factorize, gcd, mod_inv, multiplicative_order
from goodint.exceptions import DomainError, InconsistencyError, NotGoodError
from goodint.models import (
    CoprimeReason,
    CoprimeVerdict,
    ExponentProgression,
    OrderCertificate,
)

METHODS = ("direct", "structural", "both")


def _two_adic(n: int) -> int:
    return (n & -n).bit_length() - 1


def _require_coprime(a: int, b: int, ell: int) -> None:
    if a == 0 or b == 0:
        raise DomainError(f"a 与 b 必须非零: a={a}, b={b}")
    if gcd(a, b) != 1:
        raise DomainError(f"a 与 b 必须互素: gcd({a}, {b}) = {gcd(a, b)}")
    if ell < 1:
        raise DomainError(f"ℓ 必须为正: {ell}")


def _shared_factor(a: int, b: int, ell: int) -> Optional[CoprimeVerdict]:
    """ℓ 与 a 或 b 有公共素因子时直接判坏"""
    for value, reason in (
        (a, CoprimeReason.SHARES_FACTOR_WITH_A),
        (b, CoprimeReason.SHARES_FACTOR_WITH_B),
    ):
        d = gcd(ell, value)
        if d != 1:
            return CoprimeVerdict(good=False, reason=reason, offending_prime=factorize(d).primes[0])
    return None


def _ratio(a: int, b: int, m: int) -> int:
    """ab⁻¹ mod m"""
    return a * mod_inv(b, m) % m


def order_certificate(a: int, b: int, ell: int) -> OrderCertificate:
    """
    计算 ab⁻¹ 模 ℓ 的阶证书

    Args:
        a: 与 ℓ 互素的整数
        b: 与 ℓ 互素的整数
        ell: 正整数

    Returns:
        OrderCertificate对象
    """
    base = _ratio(a, b, ell)
    order = multiplicative_order(base, ell)
    half_power = pow(base, order // 2, ell) if order % 2 == 0 else None
    return OrderCertificate(
        modulus=ell,
        base=base,
        order=order,
        two_adic=_two_adic(order),
        half_power=half_power,
    )


def _odd_part_profile(a: int, b: int, d: int) -> Tuple[Tuple[int, int], ...]:
    """奇数 d 的每个素因子 p 对应的 ν_2(ord_p(ab⁻¹))"""
    return tuple(
        (p, _two_adic(multiplicative_order(_ratio(a, b, p), p)))
        for p in factorize(d).primes
    )


class CoprimeCriteria:
    """互素判据"""

    @staticmethod
    def direct(a: int, b: int, ell: int) -> CoprimeVerdict:
        """
        直接判据：ℓ 好当且仅当 ab⁻¹ 的阶为偶数且半幂 ≡ −1 (mod ℓ)

        Args:
            a: 非零整数
            b: 与 a 互素的非零整数
            ell: 正整数

        Returns:
            CoprimeVerdict对象
        """
        _require_coprime(a, b, ell)
        if ell == 1:
            return CoprimeVerdict(good=True, reason=CoprimeReason.TRIVIAL_MODULUS)

        shared = _shared_factor(a, b, ell)
        if shared is not None:
            return shared

        # a, b 都是奇数，a^k + b^k 恒为偶数
        if ell == 2:
            return CoprimeVerdict(good=True, reason=CoprimeReason.TRIVIAL_MODULUS)

        cert = order_certificate(a, b, ell)
        if cert.half_power is None:
            return CoprimeVerdict(good=False, reason=CoprimeReason.ODD_ORDER, certificate=cert)
        if cert.witnesses_minus_one:
            return CoprimeVerdict(good=True, reason=CoprimeReason.ORDER_WITNESS, certificate=cert)
        return CoprimeVerdict(good=False, reason=CoprimeReason.HALF_POWER_NOT_MINUS_ONE, certificate=cert)

    @staticmethod
    def structural(a: int, b: int, ell: int) -> CoprimeVerdict:
        """
        结构判据：写 ℓ = 2^β·d（d 为奇数），分别检验偶数部分与奇数部分

        奇数部分要求所有素数 p | d 的 ν_2(ord_p(ab⁻¹)) 等于同一个 s ≥ 1；
        β ≥ 2 时还要求 ab⁻¹ ≡ −1 (mod 2^β)，且 d > 1 时 s = 1。

        Args:
            a: 非零整数
            b: 与 a 互素的非零整数
            ell: 正整数

        Returns:
            CoprimeVerdict对象
        """
        _require_coprime(a, b, ell)
        if ell == 1:
            return CoprimeVerdict(good=True, reason=CoprimeReason.TRIVIAL_MODULUS)

        shared = _shared_factor(a, b, ell)
        if shared is not None:
            return shared

        if ell == 2:
            return CoprimeVerdict(good=True, reason=CoprimeReason.TRIVIAL_MODULUS)

        beta = _two_adic(ell)
        d = ell >> beta

        # 使用同余形式 ab⁻¹ ≡ −1，负数 a, b 同样适用
        if beta >= 2:
            power = 1 << beta
            if _ratio(a, b, power) != power - 1:
                return CoprimeVerdict(good=False, reason=CoprimeReason.EVEN_PART_FAILS)

        if d == 1:
            return CoprimeVerdict(good=True, reason=CoprimeReason.STRUCTURAL_WITNESS)

        profile = _odd_part_profile(a, b, d)
        values = {s for _, s in profile}
        if len(values) != 1 or min(values) < 1:
            return CoprimeVerdict(
                good=False,
                reason=CoprimeReason.TWO_ADIC_MISMATCH,
                two_adic_profile=profile,
            )

        if beta >= 2 and values != {1}:
            return CoprimeVerdict(
                good=False,
                reason=CoprimeReason.TWO_ADIC_MISMATCH,
                two_adic_profile=profile,
            )

        return CoprimeVerdict(
            good=True,
            reason=CoprimeReason.STRUCTURAL_WITNESS,
            two_adic_profile=profile,
        )

    @staticmethod
    def check(a: int, b: int, ell: int, method: str = "direct") -> CoprimeVerdict:
        """
        判定 ℓ ∈ G_(a,b)

        Args:
            a: 非零整数
            b: 与 a 互素的非零整数
            ell: 正整数
            method: 判据 (direct, structural, both)

        Returns:
            CoprimeVerdict对象，both 时返回直接判据的结果
        """
        if method == "direct":
            return CoprimeCriteria.direct(a, b, ell)

        elif method == "structural":
            return CoprimeCriteria.structural(a, b, ell)

        elif method == "both":
            direct = CoprimeCriteria.direct(a, b, ell)
            structural = CoprimeCriteria.structural(a, b, ell)
            if direct.good != structural.good:
                raise InconsistencyError(
                    f"两条判据不一致: a={a}, b={b}, ℓ={ell}, "
                    f"direct={direct.reason.value}, structural={structural.reason.value}"
                )
            return direct

        raise DomainError(f"未知判据: {method}，可选 {', '.join(METHODS)}")


is_good_coprime_direct = CoprimeCriteria.direct
is_good_coprime_structural = CoprimeCriteria.structural


def exponent_set_coprime(a: int, b: int, ell: int) -> ExponentProgression:
    """
    互素情形的可行指数集合

    ℓ ∈ {1, 2} 时为全部正整数；ℓ ≥ 3 时为 ord/2 的全部奇数倍，
    即 {k ≡ ord/2 (mod ord)}。

    Args:
        a: 非零整数
        b: 与 a 互素的非零整数
        ell: 好整数 ℓ

    Returns:
        ExponentProgression对象，阈值为 1
    """
    verdict = CoprimeCriteria.direct(a, b, ell)
    if not verdict.good:
        raise NotGoodError(f"ℓ={ell} 对 (a={a}, b={b}) 不是好整数: {verdict.reason.value}", verdict)
    if verdict.certificate is None:
        return ExponentProgression.build(residue=0, modulus=1, threshold=1)
    order = verdict.certificate.order
    return ExponentProgression.build(residue=order // 2, modulus=order, threshold=1)
