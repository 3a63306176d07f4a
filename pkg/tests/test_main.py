"""
명령행 진입점 테스트

main() 을 직접 부르고 stdout JSON 과 종료 코드를 확인합니다.
"""

import argparse
import json

import pytest

from constants import EXIT_PASS, EXIT_USAGE, SCHEMA_VERSION
from main import build_parser, main, parse_window, resolve_config


def _output(capsys):
    return json.loads(capsys.readouterr().out)


class TestParseWindow:
    """--window 값 파싱 테스트"""

    def test_symmetric(self):
        assert parse_window("10") == (-10, 10)

    def test_pair(self):
        assert parse_window("-5,7") == (-5, 7)

    @pytest.mark.parametrize("text", ["abc", "5,-5", "1,2,3"])
    def test_bad(self, text):
        with pytest.raises(argparse.ArgumentTypeError):
            parse_window(text)


class TestResolveConfig:
    """설정 우선순위 테스트"""

    def test_flags_override_file(self, tmp_path):
        path = tmp_path / "run.conf"
        path.write_text("lattice_bound = 3\nmax_len = 1\nwindow_min = -2\n", encoding="utf-8")
        args = build_parser().parse_args(["verify", "decat", "--config", str(path), "--max-len", "2"])
        config = resolve_config(args)
        assert config.lattice_bound == 3
        assert config.max_len == 2
        assert config.window == (-2, 10)


class TestHeckeCommand:
    """hecke 명령 테스트"""

    def test_pretty(self, capsys):
        assert main(["hecke", "s1 s1'", "--pretty"]) == EXIT_PASS
        assert capsys.readouterr().out.strip() == "1"

    def test_json(self, capsys):
        assert main(["hecke", "s1", "--strands", "2"]) == EXIT_PASS
        data = _output(capsys)
        assert data["schema"] == SCHEMA_VERSION
        assert data["kind"] == "hecke"
        assert data["terms"] == {"T[1]": "1"}

    def test_bad_word(self, capsys):
        assert main(["hecke", "s1 s9"]) == EXIT_USAGE
        data = _output(capsys)
        assert data["kind"] == "error"
        assert data["reason"] == "INDEX_OUT_OF_RANGE"
        assert data["line"] == 1


class TestOtherCommands:
    """rouquier / hom / verify 명령 테스트"""

    def test_rouquier_pretty(self, capsys):
        assert main(["rouquier", "s1", "--strands", "2", "--pretty"]) == EXIT_PASS
        assert capsys.readouterr().out.startswith("B1 @ 0")

    def test_rouquier_reduce(self, capsys):
        assert main(["rouquier", "s1 s1'", "--strands", "2", "--reduce"]) == EXIT_PASS
        data = _output(capsys)
        assert data["reduced"]["summand_count"] == 1
        assert data["reduction"]["verified"] is True
        assert data["euler"]["text"] == "1"

    def test_hom(self, capsys):
        assert main(["hom", "2:[1]:0", "2:[]:-1", "--deg", "0"]) == EXIT_PASS
        data = _output(capsys)
        assert data["dimension"] == 1
        assert len(data["basis"]) == 1
        assert data["source_module"]["graded_rank"] == "q^-1 + q"
        assert data["target_module"]["basis_degrees"] == [-1]

    def test_classes_without_search(self, capsys):
        assert main(["classes", "s1", "s1", "--strands", "2"]) == EXIT_PASS
        data = _output(capsys)
        assert data["dimension"] == 1
        assert "equivalence" not in data

    def test_classes_with_search(self, capsys):
        """같은 단어면 항등 증인으로 바로 찾음"""
        assert main(["classes", "s1", "s1", "--strands", "2", "--search"]) == EXIT_PASS
        equivalence = _output(capsys)["equivalence"]
        assert equivalence["found"] is True
        assert equivalence["method"] == "identity"
        assert "forward" not in equivalence

    def test_classes_witness(self, capsys):
        assert main(["classes", "s1", "s1", "--strands", "2", "--search", "--witness"]) == EXIT_PASS
        assert "forward" in _output(capsys)["equivalence"]

    def test_hom_strand_mismatch(self, capsys):
        assert main(["hom", "2:[1]", "3:[]"]) == EXIT_USAGE
        assert _output(capsys)["reason"] == "USAGE"

    def test_verify_decat(self, capsys):
        assert main(["verify", "decat", "--strands", "2", "--max-len", "1"]) == EXIT_PASS
        data = _output(capsys)
        assert data["suite"] == "decat"
        assert data["verdict"] == "PASS"
        assert data["counts"]["PASS"] == 2

    def test_verify_with_cache(self, tmp_path, capsys):
        argv = ["verify", "decat", "--strands", "2", "--max-len", "1", "--cache-dir", str(tmp_path)]
        assert main(argv) == EXIT_PASS
        first = _output(capsys)
        assert main(argv) == EXIT_PASS
        assert _output(capsys) == first
        assert len(list(tmp_path.iterdir())) == 2


class TestUsageErrors:
    """종료 코드 3 테스트"""

    def test_unknown_command(self):
        assert main(["braid"]) == EXIT_USAGE

    def test_unknown_suite(self):
        assert main(["verify", "r4"]) == EXIT_USAGE

    def test_missing_config(self, tmp_path, capsys):
        assert main(["hecke", "s1", "--config", str(tmp_path / "none.conf")]) == EXIT_USAGE
        assert _output(capsys)["reason"] == "USAGE"

    def test_bad_config_value(self, tmp_path, capsys):
        path = tmp_path / "bad.conf"
        path.write_text("workers = 0\n", encoding="utf-8")
        assert main(["hecke", "s1", "--config", str(path)]) == EXIT_USAGE
