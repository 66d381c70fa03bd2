"""非互素情形的判定算法、可行指数数列与特殊情形分类"""

from typing import Optional, Tuple

from goodint.arith.integer_arith import carmichael_lambda, factorize, gcd
from goodint.core.coprime_core import CoprimeCriteria, order_certificate
from goodint.exceptions import DomainError, NotGoodError
from goodint.models import (
    CoprimeVerdict,
    ExponentProgression,
    FailureStep,
    GoodnessVerdict,
    SpecialCase,
    SpecialCaseKind,
    SplitContext,
)
from goodint.split.splitter import build_context


def lift_exponent(k: int, threshold: int) -> int:
    """把互素情形的可行指数 k 提升为 ≥ max(1, threshold) 的最小奇数倍"""
    if k < 1:
        raise DomainError(f"k 必须为正: {k}")
    target = max(1, threshold)
    alpha = max(1, -(-target // k))
    if alpha % 2 == 0:
        alpha += 1
    return alpha * k


def _early_exponents(context: SplitContext, residue: int, modulus: int) -> Tuple[int, ...]:
    """
    阈值以下的可行指数

    若 p | g 同时整除 a^K + b^K，则 ν_p(A^K + B^K) 可以超过 K·ν_p(g)，
    此时 K < γ(L) 也可能可行。γ(L) 不超过 log2(L)，逐个检验即可。
    """
    L = context.L
    return tuple(
        k
        for k in range(1, max(1, context.gamma))
        if k % modulus == residue and (pow(context.A, k, L) + pow(context.B, k, L)) % L == 0
    )


def _progression(context: SplitContext, verdict: Optional[CoprimeVerdict]) -> ExponentProgression:
    """第 5 步：由 ℓ 的阶和 γ(L) 得到可行指数集合"""
    if context.ell <= 2:
        residue, modulus = 0, 1
    else:
        cert = verdict.certificate if verdict is not None else None
        if cert is None:
            # 结构判据不产生证书，这里单独计算阶
            cert = order_certificate(context.a, context.b, context.ell)
        residue, modulus = cert.order // 2, cert.order
    return ExponentProgression.build(
        residue=residue,
        modulus=modulus,
        threshold=context.gamma,
        early=_early_exponents(context, residue, modulus),
    )


def decide(A: int, B: int, L: int, method: str = "direct") -> GoodnessVerdict:
    """
    判定 L ∈ G_(A,B)，并在成立时给出全部可行指数

    Args:
        A: 非零整数
        B: 非零整数
        L: 正整数
        method: 第 4 步使用的互素判据 (direct, structural, both)

    Returns:
        GoodnessVerdict对象
    """
    # 第 1 步：拆分（同时校验输入）
    context = build_context(A, B, L)

    # 第 0 步：L = 1
    if L == 1:
        return GoodnessVerdict(
            good=True,
            context=context,
            progression=ExponentProgression.build(residue=0, modulus=1, threshold=0),
        )

    # 第 2 步：纯 g 部分
    if context.ell == 1:
        return GoodnessVerdict(good=True, context=context, progression=_progression(context, None))

    # 第 3 步：ℓ 与 a、b 必须互素
    for value, step in ((context.a, FailureStep.STEP3_GCD_A), (context.b, FailureStep.STEP3_GCD_B)):
        d = gcd(context.ell, value)
        if d != 1:
            return GoodnessVerdict(
                good=False,
                context=context,
                failure_step=step,
                offending_prime=factorize(d).primes[0],
            )

    # 第 4 步：ℓ ∈ G_(a,b)
    verdict = CoprimeCriteria.check(context.a, context.b, context.ell, method=method)
    if not verdict.good:
        return GoodnessVerdict(
            good=False,
            context=context,
            coprime_verdict=verdict,
            failure_step=FailureStep.STEP4_CORE_BAD,
        )

    # 第 5 步
    progression = _progression(context, verdict)
    lifted = None
    if context.ell >= 3:
        lifted = lift_exponent(progression.modulus // 2, context.gamma)

    return GoodnessVerdict(
        good=True,
        context=context,
        progression=progression,
        coprime_verdict=verdict,
        lifted_exponent=lifted,
    )


def exponent_set(A: int, B: int, L: int) -> ExponentProgression:
    """
    可行指数集合 {K ≡ r (mod L0), K ≥ γ(L)}，以及阈值以下可能出现的零星指数

    Args:
        A: 非零整数
        B: 非零整数
        L: 好整数

    Returns:
        ExponentProgression对象
    """
    verdict = decide(A, B, L)
    if not verdict.good:
        raise NotGoodError(f"L={L} 对 (A={A}, B={B}) 不是好整数，不存在可行指数", verdict)
    return verdict.progression


def min_exponent(A: int, B: int, L: int) -> int:
    """最小可行指数"""
    return exponent_set(A, B, L).k_min


def classify_special_case(context: SplitContext) -> SpecialCase:
    """
    特殊情形分类

    优先级: pure_g_part > g_contained > prime_power_g > squarefree_g > general。
    g_contained 要求 g 部分大于 1，此时 γ(L) = 1。

    Args:
        context: 查询的拆分

    Returns:
        SpecialCase对象，附带闭式 γ(L)
    """
    if context.ell == 1:
        return SpecialCase(kind=SpecialCaseKind.PURE_G_PART, gamma=context.gamma)

    if context.g == 1:
        return SpecialCase(kind=SpecialCaseKind.GENERAL)

    g_factors = factorize(context.g)
    L_factors = factorize(context.L)

    if context.g_part > 1 and all(L_factors.exponent(p) <= s for p, s in g_factors):
        return SpecialCase(kind=SpecialCaseKind.G_CONTAINED, gamma=1)

    if len(g_factors) == 1:
        (p, s), = g_factors.factors
        alpha = L_factors.exponent(p)
        return SpecialCase(kind=SpecialCaseKind.PRIME_POWER_G, gamma=-(-alpha // s))

    if g_factors.is_squarefree():
        return SpecialCase(
            kind=SpecialCaseKind.SQUAREFREE_G,
            gamma=max(L_factors.exponent(p) for p in g_factors.primes),
        )

    return SpecialCase(kind=SpecialCaseKind.GENERAL)


def oracle_scan_bound(context: SplitContext, multiplier: int = 4, padding: int = 4) -> int:
    """暴力扫描的默认上界 multiplier·λ(ℓ) + γ(L) + padding，必然超过最小可行指数"""
    return multiplier * carmichael_lambda(context.ell) + context.gamma + padding
