"""输出记录的构造、序列化与解析"""

import json
from typing import List, Optional

from goodint.goodness.decider import classify_special_case
from goodint.models import GoodnessVerdict, OutputRecord

SCHEMA_VERSION = "1"


def build_record(verdict: GoodnessVerdict, exponents: Optional[List[int]] = None) -> OutputRecord:
    """
    由判定结果构造输出记录，整数一律写成十进制字符串

    Args:
        verdict: 判定结果
        exponents: 附带的指数预览

    Returns:
        OutputRecord对象
    """
    ctx = verdict.context
    progression = None
    if verdict.progression is not None:
        prog = verdict.progression
        progression = {
            "residue": str(prog.residue),
            "modulus": str(prog.modulus),
            "threshold": str(prog.threshold),
            "k_min": str(prog.k_min),
            "early": [str(k) for k in prog.early],
        }

    return OutputRecord(
        schema_version=SCHEMA_VERSION,
        query={"A": str(ctx.A), "B": str(ctx.B), "L": str(ctx.L)},
        verdict=verdict.good,
        failure_step=verdict.failure_step.value if verdict.failure_step else None,
        split={
            "g": str(ctx.g),
            "a": str(ctx.a),
            "b": str(ctx.b),
            "g_part": str(ctx.g_part),
            "ell": str(ctx.ell),
            "gamma": str(ctx.gamma),
        },
        progression=progression,
        special_case=classify_special_case(ctx).kind.value,
        exponents_preview=[str(k) for k in exponents] if exponents is not None else None,
    )


def to_json(record: OutputRecord) -> str:
    """序列化为单行 JSON，键顺序固定"""
    payload = {
        "schema_version": record.schema_version,
        "query": record.query,
        "verdict": record.verdict,
        "failure_step": record.failure_step,
        "split": record.split,
        "progression": record.progression,
        "special_case": record.special_case,
        "exponents_preview": record.exponents_preview,
    }
    return json.dumps(payload, ensure_ascii=False, separators=(",", ":"))


def parse_record(line: str) -> OutputRecord:
    """
    解析一行 JSON 输出

    Args:
        line: to_json 产生的文本

    Returns:
        OutputRecord对象
    """
    data = json.loads(line)
    if data.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"不支持的 schema_version: {data.get('schema_version')}")
    return OutputRecord(
        schema_version=data["schema_version"],
        query=data["query"],
        verdict=data["verdict"],
        failure_step=data["failure_step"],
        split=data["split"],
        progression=data["progression"],
        special_case=data["special_case"],
        exponents_preview=data["exponents_preview"],
    )
