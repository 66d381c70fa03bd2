"""整数运算基础"""

from goodint.arith.integer_arith import (
    carmichael_lambda,
    factorize,
    gcd,
    is_prime,
    mod_inv,
    mod_pow,
    multiplicative_order,
    order_lifting_exponent,
    p_adic_valuation,
    prime_divisors,
)

__all__ = [
    "carmichael_lambda",
    "factorize",
    "gcd",
    "is_prime",
    "mod_inv",
    "mod_pow",
    "multiplicative_order",
    "order_lifting_exponent",
    "p_adic_valuation",
    "prime_divisors",
]
