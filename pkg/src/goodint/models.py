"""数据模型定义"""

from dataclasses import dataclass
from enum import Enum
from itertools import chain, count as count_from
from math import prod
from typing import Iterator, Optional, Tuple


@dataclass
class GoodnessConfig:
    """运行配置"""
    preview_count: int = 5  # check 输出中预览的指数个数
    exponents_count: int = 10  # exponents 命令默认输出个数
    scan_multiplier: int = 4  # 暴力扫描上界中 λ(ℓ) 的倍数
    scan_padding: int = 4  # 暴力扫描上界的附加余量
    workers: int = 1  # 枚举时的并行进程数
    chunk_size: int = 2000  # 每个任务块的模数个数
    cross_check: bool = False  # 是否同时运行两条互素判据


@dataclass(frozen=True)
class Factorization:
    """素因子分解，按素数升序排列的 (素数, 指数) 列表"""
    factors: Tuple[Tuple[int, int], ...] = ()

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    @property
    def primes(self) -> Tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def exponent(self, p: int) -> int:
        """返回素数 p 的指数，不出现时为 0"""
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def value(self) -> int:
        """还原被分解的整数"""
        return prod(p ** e for p, e in self.factors)

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.factors)


@dataclass(frozen=True)
class SplitContext:
    """一次查询的完整分解"""
    A: int
    B: int
    L: int
    g: int  # gcd(A, B)，恒为正
    a: int  # A / g，保留符号
    b: int  # B / g，保留符号
    g_part: int  # L 中整除 g 的素数部分
    ell: int  # 与 g 互素的核心部分
    gamma: int  # 阈值 γ(L)


@dataclass(frozen=True)
class OrderCertificate:
    """阶证书：ord_ℓ(ab⁻¹) 及其半幂"""
    modulus: int
    base: int  # ab⁻¹ mod ℓ
    order: int
    two_adic: int  # ν_2(order)
    half_power: Optional[int] = None  # (ab⁻¹)^(order/2) mod ℓ，仅当阶为偶数

    @property
    def witnesses_minus_one(self) -> bool:
        return self.half_power is not None and self.half_power == self.modulus - 1


class CoprimeReason(Enum):
    """互素判定的理由"""
    TRIVIAL_MODULUS = "trivial_modulus"
    ORDER_WITNESS = "order_witness"
    STRUCTURAL_WITNESS = "structural_witness"
    SHARES_FACTOR_WITH_A = "shares_factor_with_a"
    SHARES_FACTOR_WITH_B = "shares_factor_with_b"
    ODD_ORDER = "odd_order"
    HALF_POWER_NOT_MINUS_ONE = "half_power_not_minus_one"
    TWO_ADIC_MISMATCH = "two_adic_mismatch"
    EVEN_PART_FAILS = "even_part_fails"


GOOD_REASONS = frozenset({
    CoprimeReason.TRIVIAL_MODULUS,
    CoprimeReason.ORDER_WITNESS,
    CoprimeReason.STRUCTURAL_WITNESS,
})


@dataclass(frozen=True)
class CoprimeVerdict:
    """互素情形 ℓ ∈ G_(a,b) 的判定结果"""
    good: bool
    reason: CoprimeReason
    certificate: Optional[OrderCertificate] = None
    offending_prime: Optional[int] = None  # shares_factor_* 时的公共素因子
    # 结构判据：每个素数 p | d 的 (p, ν_2(ord_p(ab⁻¹)))
    two_adic_profile: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.good != (self.reason in GOOD_REASONS):
            raise ValueError(f"判定结果与理由不一致: good={self.good}, reason={self.reason.value}")
        shares = self.reason in (CoprimeReason.SHARES_FACTOR_WITH_A, CoprimeReason.SHARES_FACTOR_WITH_B)
        if shares and self.offending_prime is None:
            raise ValueError("公共因子理由必须携带素数")


@dataclass(frozen=True)
class ExponentProgression:
    """截断等差数列 {K ≡ residue (mod modulus), K ≥ threshold}，外加阈值以下的零星可行指数"""
    residue: int
    modulus: int
    threshold: int  # 原始 γ(L)，可能为 0
    k_min: int
    # 小于 max(1, threshold) 的可行指数：p | g 同时整除 a^K + b^K 时才会出现
    early: Tuple[int, ...] = ()

    @classmethod
    def build(
        cls,
        residue: int,
        modulus: int,
        threshold: int,
        early: Tuple[int, ...] = (),
    ) -> "ExponentProgression":
        """
        由余数、模数和阈值构造数列并计算最小元素

        K 取正整数，因此成员判定使用 max(1, threshold)。余数先约化到 [0, modulus)。

        Args:
            residue: 余数 r
            modulus: 周期 L0
            threshold: 阈值 γ(L)
            early: 阈值以下的可行指数

        Returns:
            ExponentProgression对象
        """
        if modulus < 1:
            raise ValueError(f"周期必须为正: {modulus}")
        residue %= modulus
        start = max(1, threshold)
        early = tuple(sorted(early))
        if any(k < 1 or k >= start for k in early):
            raise ValueError(f"阈值以下的指数必须落在 [1, {start}): {early}")
        tail_min = start + (residue - start) % modulus
        k_min = early[0] if early else tail_min
        return cls(residue=residue, modulus=modulus, threshold=threshold, k_min=k_min, early=early)

    @property
    def start(self) -> int:
        return max(1, self.threshold)

    @property
    def tail_min(self) -> int:
        """数列部分的最小元素 γ + ((r − γ) mod L0)"""
        return self.start + (self.residue - self.start) % self.modulus

    def contains(self, k: int) -> bool:
        if k in self.early:
            return True
        return k >= self.start and k % self.modulus == self.residue

    def iter_exponents(self, count: Optional[int] = None, limit: Optional[int] = None) -> Iterator[int]:
        """
        按升序生成可行指数

        Args:
            count: 最多生成的个数
            limit: 生成不超过该值的指数

        Returns:
            指数迭代器
        """
        if count is None and limit is None:
            raise ValueError("count 与 limit 至少指定一个")
        produced = 0
        for k in chain(self.early, count_from(self.tail_min, self.modulus)):
            if (count is not None and produced >= count) or (limit is not None and k > limit):
                return
            yield k
            produced += 1

    def parity(self) -> Optional[str]:
        """所有可行指数共同的奇偶性；两种奇偶都出现时返回 None"""
        if self.modulus % 2 == 1:
            return None
        return "even" if self.residue % 2 == 0 else "odd"

    def describe(self) -> str:
        if self.modulus == 1:
            text = f"K ≥ {self.start}"
        else:
            text = f"K ≡ {self.residue} (mod {self.modulus}), K ≥ {self.start}"
        if self.early:
            text += f"; 另有 K ∈ {{{', '.join(map(str, self.early))}}}"
        return text


class FailureStep(Enum):
    """判定算法失败的步骤"""
    STEP3_GCD_A = "step3_gcd_a"
    STEP3_GCD_B = "step3_gcd_b"
    STEP4_CORE_BAD = "step4_core_bad"


@dataclass(frozen=True)
class GoodnessVerdict:
    """非互素情形 L ∈ G_(A,B) 的判定结果"""
    good: bool
    context: SplitContext
    progression: Optional[ExponentProgression] = None
    coprime_verdict: Optional[CoprimeVerdict] = None
    failure_step: Optional[FailureStep] = None
    offending_prime: Optional[int] = None
    # 将 ord/2 提升为 ≥ γ(L) 的最小奇数倍，恒等于 progression.tail_min，仅 ℓ ≥ 3 时给出
    lifted_exponent: Optional[int] = None

    def __post_init__(self):
        if self.good != (self.progression is not None):
            raise ValueError("good 为真当且仅当给出指数数列")
        if self.good == (self.failure_step is not None):
            raise ValueError("good 为假当且仅当给出失败步骤")
        if self.lifted_exponent is not None and (
            self.progression is None or self.lifted_exponent != self.progression.tail_min
        ):
            raise ValueError(f"提升后的指数 {self.lifted_exponent} 不是数列的最小元素")


class SpecialCaseKind(Enum):
    """特殊情形分类"""
    PURE_G_PART = "pure_g_part"
    G_CONTAINED = "g_contained"
    PRIME_POWER_G = "prime_power_g"
    SQUAREFREE_G = "squarefree_g"
    GENERAL = "general"


@dataclass(frozen=True)
class SpecialCase:
    """特殊情形及其闭式阈值"""
    kind: SpecialCaseKind
    gamma: Optional[int] = None  # 闭式给出的 γ(L)，general 时为 None


@dataclass(frozen=True)
class OracleReport:
    """暴力扫描结果"""
    admissible: Tuple[int, ...]
    bound: int

    @property
    def found(self) -> bool:
        return bool(self.admissible)


@dataclass
class OutputRecord:
    """机器可读输出记录"""
    query: dict  # {"A", "B", "L"}，十进制字符串
    verdict: bool
    split: dict  # {"g", "a", "b", "g_part", "ell", "gamma"}
    special_case: str
    failure_step: Optional[str] = None
    progression: Optional[dict] = None  # {"residue", "modulus", "threshold", "k_min", "early"}
    exponents_preview: Optional[list] = None
    schema_version: str = "1"
