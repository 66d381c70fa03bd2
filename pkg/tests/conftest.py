"""pytest配置文件"""

import pytest


@pytest.fixture
def sample_config():
    """测试用的配置对象"""
    from goodint.models import GoodnessConfig
    return GoodnessConfig(
        preview_count=4,
        exponents_count=6,
        workers=1,
        chunk_size=7,
    )


@pytest.fixture
def config_file(tmp_path):
    """测试用的INI配置文件"""
    path = tmp_path / "config.ini"
    path.write_text(
        "[Output]\n"
        "preview_count = 3\n"
        "exponents_count = 4\n"
        "\n"
        "[Oracle]\n"
        "scan_multiplier = 2\n"
        "\n"
        "[Decision]\n"
        "cross_check = true\n",
        encoding="utf-8",
    )
    return str(path)


@pytest.fixture
def golden_good():
    """已知的好整数查询及其可行指数数列 (A, B, L, residue, modulus, threshold, k_min)"""
    return [
        (18, 12, 3200, 5, 10, 7, 15),
        (6, 3, 15, 2, 4, 1, 2),
        (18, 12, 72, 0, 1, 3, 3),
        (18, 12, 1200, 5, 10, 4, 5),
    ]


@pytest.fixture
def sample_verdicts():
    """测试用的判定结果列表"""
    from goodint.goodness.decider import decide

    return [decide(18, 12, L) for L in (1, 7, 19, 72, 3200)] + [decide(10, 15, 6)]
