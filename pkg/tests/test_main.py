"""测试命令行入口"""

import json

import pytest
from unittest.mock import patch
from goodint.main import load_config, main
from goodint.models import OracleReport
from goodint.report import parse_record, to_json


@pytest.fixture(autouse=True)
def isolated_cwd(tmp_path, monkeypatch):
    """在临时目录中运行，避免读到仓库根目录的 config.ini"""
    monkeypatch.chdir(tmp_path)


class TestLoadConfig:
    """测试load_config"""

    def test_missing_file_defaults(self):
        config = load_config("nonexistent.ini")

        assert config.preview_count == 5
        assert config.workers == 1
        assert config.cross_check is False

    def test_load_values(self, config_file):
        config = load_config(config_file)

        assert config.preview_count == 3
        assert config.exponents_count == 4
        assert config.scan_multiplier == 2
        assert config.scan_padding == 4
        assert config.cross_check is True

    def test_invalid_value(self, tmp_path):
        path = tmp_path / "bad.ini"
        path.write_text("[Enumerate]\nworkers = 0\n", encoding="utf-8")

        with pytest.raises(ValueError, match="workers"):
            load_config(str(path))

    def test_malformed_value_exit_code(self, tmp_path, capsys):
        path = tmp_path / "bad.ini"
        path.write_text("[Output]\npreview_count = many\n", encoding="utf-8")

        assert main(["check", "18", "12", "3200", "--config", str(path)]) == 2
        assert "配置错误" in capsys.readouterr().err


class TestCheckCommand:
    """测试check子命令"""

    def test_good(self, capsys):
        assert main(["check", "18", "12", "3200"]) == 0

        out = capsys.readouterr().out
        assert "✓ 好整数" in out
        assert "g=6 a=3 b=2 g_part=128 ell=25 gamma=7" in out
        assert "K ≡ 5 (mod 10), K ≥ 7" in out
        assert "最小指数: 15" in out
        assert "指数预览: 15 25 35 45 55" in out

    def test_bad(self, capsys):
        assert main(["check", "10", "15", "6"]) == 1

        out = capsys.readouterr().out
        assert "✗ 坏整数" in out
        assert "第 3 步" in out

    def test_step4_bad(self, capsys):
        assert main(["check", "18", "12", "19"]) == 1
        assert "第 4 步" in capsys.readouterr().out

    @pytest.mark.parametrize("argv", [
        ["check", "18", "12", "0"],
        ["check", "0", "12", "5"],
        ["check", "18", "12", "-4"],
    ])
    def test_domain_errors(self, argv, capsys):
        assert main(argv) == 2
        assert "输入错误" in capsys.readouterr().err

    @pytest.mark.parametrize("argv", [
        ["check", "18", "12", "abc"],
        ["check", "18", "12"],
        ["check", "1.5", "12", "7"],
        [],
    ])
    def test_usage_errors(self, argv):
        assert main(argv) == 2

    def test_negative_argument(self):
        """负数按位置参数解析"""
        assert main(["check", "-18", "12", "1200", "--quiet"]) == 1
        assert main(["check", "3", "-3", "97", "--quiet"]) == 0

    def test_quiet(self, capsys):
        assert main(["check", "18", "12", "3200", "--quiet"]) == 0
        assert capsys.readouterr().out == "good k_min=15\n"

        assert main(["check", "10", "15", "6", "--quiet"]) == 1
        assert capsys.readouterr().out == "bad step3_gcd_a\n"

    def test_json(self, capsys):
        assert main(["check", "18", "12", "3200", "--json"]) == 0

        line = capsys.readouterr().out.strip()
        record = parse_record(line)
        assert record.verdict is True
        assert record.progression["k_min"] == "15"
        assert record.exponents_preview == ["15", "25", "35", "45", "55"]
        assert to_json(record) == line

    def test_json_byte_stable(self, capsys):
        main(["check", "6", "3", "15", "--json"])
        first = capsys.readouterr().out
        main(["check", "6", "3", "15", "--json", "--structural"])
        second = capsys.readouterr().out
        assert first == second

    def test_verify_golden(self):
        for argv in (["18", "12", "3200"], ["6", "3", "15"], ["18", "12", "72"], ["18", "12", "1200"]):
            assert main(["check", *argv, "--verify", "--quiet"]) == 0
        assert main(["check", "10", "15", "6", "--verify", "--quiet"]) == 1

    def test_preview_from_config(self, config_file, capsys):
        main(["check", "18", "12", "3200", "--config", config_file])
        assert "指数预览: 15 25 35\n" in capsys.readouterr().out

    def test_options_before_subcommand(self, config_file, capsys):
        """公共选项写在子命令前面"""
        assert main(["--json", "check", "18", "12", "3200"]) == 0
        record = parse_record(capsys.readouterr().out.strip())
        assert record.progression["k_min"] == "15"

        assert main(["--quiet", "--verify", "check", "10", "15", "6"]) == 1
        assert capsys.readouterr().out == "bad step3_gcd_a\n"

        main(["--config", config_file, "check", "18", "12", "3200"])
        assert "指数预览: 15 25 35\n" in capsys.readouterr().out

    def test_options_on_both_sides(self, capsys):
        """子命令不会重置写在前面的选项"""
        assert main(["--quiet", "check", "18", "12", "3200", "--structural"]) == 0
        assert capsys.readouterr().out == "good k_min=15\n"


class TestExponentsCommand:
    """测试exponents子命令"""

    @pytest.mark.parametrize("argv,expected", [
        (["18", "12", "3200", "--count", "4"], "15 25 35 45"),
        (["6", "3", "15", "--limit", "20"], "2 6 10 14 18"),
        (["5", "7", "1", "--count", "3"], "1 2 3"),
        (["2", "6", "8", "--count", "4"], "1 2 3 4"),
    ])
    def test_listing(self, argv, expected, capsys):
        assert main(["exponents", *argv]) == 0
        assert capsys.readouterr().out.strip() == expected

    def test_default_count(self, capsys):
        assert main(["exponents", "6", "3", "15"]) == 0
        assert capsys.readouterr().out.split() == [str(k) for k in range(2, 40, 4)]

    def test_bad_modulus(self, capsys):
        assert main(["exponents", "10", "15", "6", "--count", "3"]) == 1
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "不是好整数" in captured.err

    def test_count_and_limit_exclusive(self):
        assert main(["exponents", "18", "12", "3200", "--count", "4", "--limit", "50"]) == 2

    def test_non_positive_count(self):
        assert main(["exponents", "18", "12", "3200", "--count", "0"]) == 2

    def test_verify(self, capsys):
        assert main(["exponents", "18", "12", "3200", "--count", "4", "--verify"]) == 0
        assert capsys.readouterr().out.strip() == "15 25 35 45"

    @patch('goodint.main.divides_power_sum')
    def test_verify_mismatch(self, mock_divides, capsys):
        """逐个复核失败时退出码为 3"""
        mock_divides.return_value = False

        assert main(["exponents", "18", "12", "3200", "--count", "4", "--verify"]) == 3
        assert "内部不一致" in capsys.readouterr().err

    def test_json(self, capsys):
        main(["exponents", "18", "12", "3200", "--count", "2", "--json"])
        record = json.loads(capsys.readouterr().out)
        assert record["exponents_preview"] == ["15", "25"]


class TestSplitCommand:
    """测试split子命令"""

    def test_split(self, capsys):
        assert main(["split", "18", "12", "1200"]) == 0
        assert capsys.readouterr().out == "g=6 a=3 b=2 g_part=48 ell=25 gamma=4\n"

    def test_split_bad_modulus_succeeds(self, capsys):
        assert main(["split", "10", "15", "6"]) == 0
        assert capsys.readouterr().out == "g=5 a=2 b=3 g_part=1 ell=6 gamma=0\n"

    def test_split_json(self, capsys):
        assert main(["split", "18", "12", "1200", "--json"]) == 0
        record = json.loads(capsys.readouterr().out)
        assert record["split"]["g_part"] == "48"


class TestEnumerateCommand:
    """测试enumerate子命令"""

    def test_enumerate(self, capsys):
        assert main(["enumerate", "2", "1", "12"]) == 0
        assert capsys.readouterr().out.split() == ["1", "3", "5", "9", "11"]

    def test_enumerate_json(self, capsys):
        assert main(["enumerate", "2", "1", "12", "--json"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert [json.loads(line)["query"]["L"] for line in lines] == ["1", "3", "5", "9", "11"]

    def test_parallel_identical(self, capsys):
        main(["enumerate", "18", "12", "300", "--json"])
        sequential = capsys.readouterr().out
        main(["enumerate", "18", "12", "300", "--json", "--workers", "2"])
        assert capsys.readouterr().out == sequential

    def test_output_file(self, tmp_path, capsys):
        output = tmp_path / "good.csv"
        assert main(["enumerate", "2", "1", "12", "--output", str(output)]) == 0
        assert output.exists()
        assert capsys.readouterr().out.split() == ["1", "3", "5", "9", "11"]

    def test_verify(self):
        assert main(["enumerate", "18", "12", "60", "--verify", "--quiet"]) == 0

    def test_invalid_bound(self):
        assert main(["enumerate", "2", "1", "0"]) == 2
        assert main(["enumerate", "2", "1", "10", "--workers", "0"]) == 2


class TestVerifyCommand:
    """测试verify子命令"""

    def test_agreement(self, capsys):
        assert main(["verify", "18", "12", "3200", "--bound", "500"]) == 0
        assert "一致" in capsys.readouterr().out

    def test_bad_modulus_agrees(self):
        """坏整数且扫描为空时也算一致"""
        assert main(["verify", "10", "15", "6", "--quiet"]) == 0

    @patch('goodint.processor.batch_enumerator.scan_exponents')
    def test_mismatch(self, mock_scan, capsys):
        mock_scan.return_value = OracleReport(admissible=(1,), bound=500)

        assert main(["verify", "18", "12", "3200", "--bound", "500"]) == 3
        assert "内部不一致" in capsys.readouterr().err

    def test_golden_suite(self):
        for argv in (["18", "12", "3200"], ["6", "3", "15"], ["18", "12", "72"], ["18", "12", "1200"], ["2", "6", "8"]):
            assert main(["verify", *argv, "--bound", "500", "--quiet"]) == 0
