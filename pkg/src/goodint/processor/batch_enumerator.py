"""好整数批量枚举器"""

import sys
from collections import deque
from concurrent.futures import Future, ProcessPoolExecutor
from typing import Any, Deque, Dict, Iterable, Iterator, List, Optional, Tuple

import pandas as pd

from goodint.exceptions import DomainError, InconsistencyError
from goodint.goodness.decider import classify_special_case, decide, oracle_scan_bound
from goodint.models import ExponentProgression, GoodnessConfig, GoodnessVerdict, OracleReport
from goodint.oracle.brute_force import scan_exponents


def _decide_chunk(task: Tuple[int, int, int, int, str]) -> List[GoodnessVerdict]:
    """子进程任务：判定 [start, stop) 内的全部模数"""
    A, B, start, stop, method = task
    return [decide(A, B, L, method=method) for L in range(start, stop)]


def _windowed_map(executor: ProcessPoolExecutor, tasks: Iterable[Tuple], window: int) -> Iterator[List[GoodnessVerdict]]:
    """按提交顺序产生结果，同时在途的块不超过 window 个"""
    pending: Deque[Future] = deque()
    for task in tasks:
        if len(pending) >= window:
            yield pending.popleft().result()
        pending.append(executor.submit(_decide_chunk, task))
    while pending:
        yield pending.popleft().result()


class GoodIntegerEnumerator:
    """好整数批量枚举器"""

    def __init__(self, config: Optional[GoodnessConfig] = None, method: str = "direct", verbose: bool = False):
        self.config = config or GoodnessConfig()
        self.method = "both" if self.config.cross_check and method == "direct" else method
        self.verbose = verbose

    def process_modulus(self, A: int, B: int, L: int) -> GoodnessVerdict:
        """判定单个模数"""
        return decide(A, B, L, method=self.method)

    def iter_verdicts(self, A: int, B: int, N: int) -> Iterator[GoodnessVerdict]:
        """
        按 L 升序逐个产生 1..N 的判定结果

        workers > 1 时按块分给子进程，结果仍按块的顺序合并，
        输出与顺序执行完全一致。

        Args:
            A: 非零整数
            B: 非零整数
            N: 枚举上界

        Returns:
            GoodnessVerdict迭代器
        """
        if N < 1:
            raise DomainError(f"N 必须为正: {N}")
        if A == 0 or B == 0:
            raise DomainError(f"A 与 B 必须非零: A={A}, B={B}")

        chunk = max(1, self.config.chunk_size)
        tasks = (
            (A, B, start, min(start + chunk, N + 1), self.method)
            for start in range(1, N + 1, chunk)
        )

        if self.config.workers <= 1:
            chunks = map(_decide_chunk, tasks)
            yield from self._drain(chunks, N)
            return

        with ProcessPoolExecutor(max_workers=self.config.workers) as executor:
            window = 2 * self.config.workers
            yield from self._drain(_windowed_map(executor, tasks, window), N)

    def _drain(self, chunks, N: int) -> Iterator[GoodnessVerdict]:
        for verdicts in chunks:
            if self.verbose and verdicts:
                print(f"[{verdicts[-1].context.L}/{N}] 已判定", file=sys.stderr)
            yield from verdicts

    def enumerate_good(self, A: int, B: int, N: int) -> List[Tuple[int, ExponentProgression]]:
        """
        列出 1..N 中全部好整数及其可行指数数列

        Args:
            A: 非零整数
            B: 非零整数
            N: 枚举上界

        Returns:
            按 L 升序排列的 (L, ExponentProgression) 列表
        """
        return [
            (verdict.context.L, verdict.progression)
            for verdict in self.iter_verdicts(A, B, N)
            if verdict.good
        ]

    def verify_modulus(self, A: int, B: int, L: int, bound: Optional[int] = None) -> Tuple[GoodnessVerdict, OracleReport]:
        """
        用暴力扫描核对判定结果

        Args:
            A: 非零整数
            B: 非零整数
            L: 正整数
            bound: 扫描上界，默认 scan_multiplier·λ(ℓ) + γ(L) + scan_padding

        Returns:
            (判定结果, 扫描结果)
        """
        verdict = self.process_modulus(A, B, L)
        if bound is None:
            bound = oracle_scan_bound(
                verdict.context,
                multiplier=self.config.scan_multiplier,
                padding=self.config.scan_padding,
            )
        report = scan_exponents(A, B, L, bound)

        expected: Tuple[int, ...] = ()
        if verdict.good:
            expected = tuple(verdict.progression.iter_exponents(limit=bound))

        if report.admissible != expected:
            raise InconsistencyError(
                f"判定与暴力扫描不一致: A={A}, B={B}, L={L}, bound={bound}, "
                f"判定={expected[:10]}, 扫描={report.admissible[:10]}"
            )
        return verdict, report

    def calculate_statistics(self, verdicts: List[GoodnessVerdict]) -> Dict[str, Any]:
        """
        计算统计信息

        Args:
            verdicts: GoodnessVerdict列表

        Returns:
            统计信息字典
        """
        total = len(verdicts)
        if total == 0:
            return {}

        good = sum(1 for v in verdicts if v.good)

        failure_step_stats: Dict[str, int] = {}
        special_case_stats: Dict[str, int] = {}
        for verdict in verdicts:
            if verdict.failure_step is not None:
                key = verdict.failure_step.value
                failure_step_stats[key] = failure_step_stats.get(key, 0) + 1
            kind = classify_special_case(verdict.context).kind.value
            special_case_stats[kind] = special_case_stats.get(kind, 0) + 1

        return {
            "total": total,
            "good": good,
            "bad": total - good,
            "failure_step_stats": failure_step_stats,
            "special_case_stats": special_case_stats,
        }

    def save_results(self, verdicts: List[GoodnessVerdict], statistics: Dict[str, Any], output_path: str):
        """
        保存结果到文件，.csv 后缀写 CSV，否则写 Excel（含统计信息sheet）

        Args:
            verdicts: GoodnessVerdict列表
            statistics: 统计信息
            output_path: 输出文件路径
        """
        data = []
        for verdict in verdicts:
            ctx = verdict.context
            prog = verdict.progression
            data.append({
                "L": str(ctx.L),
                "是否好整数": "✓" if verdict.good else "✗",
                "g部分": str(ctx.g_part),
                "ℓ": str(ctx.ell),
                "γ": str(ctx.gamma),
                "余数": str(prog.residue) if prog else "",
                "周期": str(prog.modulus) if prog else "",
                "最小指数": str(prog.k_min) if prog else "",
                "失败步骤": verdict.failure_step.value if verdict.failure_step else "",
                "特殊情形": classify_special_case(ctx).kind.value,
            })

        df = pd.DataFrame(data)

        if output_path.lower().endswith(".csv"):
            df.to_csv(output_path, index=False)
        else:
            with pd.ExcelWriter(output_path, engine='openpyxl') as writer:
                df.to_excel(writer, sheet_name="判定结果", index=False)

                stats_data = [
                    ["总数量", statistics.get("total", 0)],
                    ["好整数数量", statistics.get("good", 0)],
                    ["坏整数数量", statistics.get("bad", 0)],
                ]
                for step, count in statistics.get("failure_step_stats", {}).items():
                    stats_data.append([f"失败步骤 {step}", count])
                for kind, count in statistics.get("special_case_stats", {}).items():
                    stats_data.append([f"特殊情形 {kind}", count])

                stats_df = pd.DataFrame(stats_data, columns=["指标", "数值"])
                stats_df.to_excel(writer, sheet_name="统计信息", index=False)

        if self.verbose:
            print(f"结果已保存到: {output_path}", file=sys.stderr)


def enumerate_good(
    A: int,
    B: int,
    N: int,
    workers: int = 1,
) -> List[Tuple[int, ExponentProgression]]:
    """1..N 中的全部好整数，按 L 升序"""
    config = GoodnessConfig(workers=workers)
    return GoodIntegerEnumerator(config).enumerate_good(A, B, N)
