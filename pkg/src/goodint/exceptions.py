"""异常定义"""


class GoodIntError(Exception):
    """所有异常的基类"""


class DomainError(GoodIntError, ValueError):
    """输入不满足前置条件"""


class NotInvertibleError(DomainError):
    """元素在给定模数下不可逆"""

    def __init__(self, value: int, modulus: int, gcd: int):
        self.value = value
        self.modulus = modulus
        self.gcd = gcd
        super().__init__(f"{value} 模 {modulus} 不可逆: gcd={gcd}")


class NotGoodError(DomainError):
    """对坏整数请求可行指数"""

    def __init__(self, message: str, verdict=None):
        self.verdict = verdict
        super().__init__(message)


class InconsistencyError(GoodIntError, RuntimeError):
    """两条判据或判定与暴力扫描之间出现分歧"""
