"""L 的拆分"""

from goodint.split.splitter import build_context, gamma, lambda_split

__all__ = ["build_context", "gamma", "lambda_split"]
