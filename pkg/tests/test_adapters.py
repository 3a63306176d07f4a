"""
어댑터 테스트: 설정 로더, JSON 결과 캐시, JSON 직렬화
"""

import json
import logging

import pytest

from adapters.repository.json_codec import (
    bimodule_to_dict,
    complex_to_dict,
    document,
    dumps,
    hecke_to_dict,
    search_to_dict,
)
from adapters.repository.json_result_cache import JsonResultCache
from adapters.repository.key_value_config_loader import KeyValueConfigLoader
from constants import CACHE_FILE_SUFFIX, REASON_OK, SCHEMA_VERSION
from core.domain.bimodule import realize
from core.domain.equivalence import find_homotopy_equivalence
from core.domain.hecke import braid_image
from core.domain.rouquier import rouquier
from core.domain.words import parse_braid, parse_bs_word
from core.ports.result_cache_port import cache_key


class TestKeyValueConfigLoader:
    """key=value 설정 로더 테스트"""

    def test_parse_values(self):
        lines = [
            "# 기본 설정",
            "",
            "window_min = -4",
            "window_max = 6   # 주석",
            "lattice_bound = 3",
            'cache_dir = ".cache"',
        ]
        values = KeyValueConfigLoader().parse(lines)
        assert values == {"window_min": -4, "window_max": 6, "lattice_bound": 3, "cache_dir": ".cache"}

    def test_unknown_key_is_skipped(self, caplog):
        with caplog.at_level(logging.WARNING):
            values = KeyValueConfigLoader().parse(["colour = blue", "workers = 2"])
        assert values == {"workers": 2}
        assert "colour" in caplog.text

    def test_missing_equals(self):
        with pytest.raises(ValueError, match="2행: 'key = value' 형식"):
            KeyValueConfigLoader().parse(["workers = 1", "strands 3"])

    @pytest.mark.parametrize("line", ["lattice_bound = 0", "max_len = -1", "strands = three", "cache_dir = ''"])
    def test_bad_values(self, line):
        with pytest.raises(ValueError, match="값 오류"):
            KeyValueConfigLoader().parse([line])

    def test_window_order(self):
        with pytest.raises(ValueError, match="window_min 이 window_max 보다"):
            KeyValueConfigLoader().parse(["window_min = 5", "window_max = 1"])

    def test_load_file(self, tmp_path):
        path = tmp_path / "soergel.conf"
        path.write_text("max_len = 2\nworkers = 4\n", encoding="utf-8")
        assert KeyValueConfigLoader().load(str(path)) == {"max_len": 2, "workers": 4}

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError, match="찾을 수 없습니다"):
            KeyValueConfigLoader().load(str(tmp_path / "none.conf"))


class TestJsonResultCache:
    """JSON 결과 캐시 테스트"""

    def test_put_then_get(self, tmp_path):
        cache = JsonResultCache(str(tmp_path / "cache"))
        cache.put("abc", {"name": "r2(s1 s1')", "verdict": "PASS"})
        assert (tmp_path / "cache" / f"abc{CACHE_FILE_SUFFIX}").exists()

        fresh = JsonResultCache(str(tmp_path / "cache"))
        stored = fresh.get("abc")
        assert stored["verdict"] == "PASS"
        assert stored["schema"] == SCHEMA_VERSION

    def test_missing_key(self, tmp_path):
        assert JsonResultCache(str(tmp_path)).get("nothing") is None

    def test_corrupt_file_is_ignored(self, tmp_path, caplog):
        (tmp_path / f"bad{CACHE_FILE_SUFFIX}").write_text("{not json", encoding="utf-8")
        with caplog.at_level(logging.WARNING):
            assert JsonResultCache(str(tmp_path)).get("bad") is None
        assert "무시" in caplog.text

    def test_schema_mismatch_is_ignored(self, tmp_path):
        (tmp_path / f"old{CACHE_FILE_SUFFIX}").write_text(json.dumps({"schema": -1}), encoding="utf-8")
        assert JsonResultCache(str(tmp_path)).get("old") is None

    def test_clear(self, tmp_path):
        cache = JsonResultCache(str(tmp_path))
        cache.put("k", {"verdict": "FAIL"})
        cache.clear()
        assert cache.get("k") is None
        assert list(tmp_path.glob(f"*{CACHE_FILE_SUFFIX}")) == []


class TestCacheKey:
    """캐시 키 테스트"""

    def test_argument_order_does_not_matter(self):
        assert cache_key("check", {"a": 1, "b": [2]}) == cache_key("check", {"b": [2], "a": 1})

    def test_command_matters(self):
        assert cache_key("check", {}) != cache_key("hom", {})
        assert len(cache_key("check", {})) == 64


class TestJsonCodec:
    """JSON 직렬화 테스트"""

    def test_document_has_schema(self):
        doc = document("hecke", {"text": "1"})
        assert doc == {"schema": SCHEMA_VERSION, "kind": "hecke", "text": "1"}

    def test_dumps_is_sorted(self):
        text = dumps({"b": 1, "a": "가"})
        assert text.index('"a"') < text.index('"b"')
        assert "가" in text

    def test_hecke(self):
        data = hecke_to_dict(braid_image(parse_braid("s1 s1'", 2)))
        assert data == {"strands": 2, "text": "1", "terms": {"T[]": "1"}}

    def test_complex(self):
        data = complex_to_dict(rouquier(parse_braid("s1", 2)))
        assert data["strands"] == 2
        assert data["summand_count"] == 2
        assert [d["degree"] for d in data["degrees"]] == [0, 1]
        assert data["degrees"][0]["summands"] == ["B1"]
        assert sum(len(d["differential"]) for d in data["degrees"]) == 1

    def test_bimodule(self):
        """B1 의 등급 계수와 왼쪽 작용"""
        data = bimodule_to_dict(realize(parse_bs_word("2:[1]:0")))
        assert data["kind"] == "BOTT_SAMELSON"
        assert data["strands"] == 2
        assert data["basis_degrees"] == [-1, 1]
        assert data["graded_rank"] == "q^-1 + q"
        assert set(data["left_action"]) == {"x1", "x2"}

    def test_search(self):
        complex_ = rouquier(parse_braid("s1", 2))
        data = search_to_dict(find_homotopy_equivalence(complex_, complex_))
        assert data["found"] is True
        assert data["reason"] == REASON_OK
        assert data["method"] == "identity"
        assert set(data["witness_sizes"]) == {"f", "g", "h", "k"}
        assert "forward" not in data

    def test_search_full_witness(self):
        complex_ = rouquier(parse_braid("s1", 2))
        data = search_to_dict(find_homotopy_equivalence(complex_, complex_), full=True)
        assert set(data) >= {"forward", "backward", "source_homotopy", "target_homotopy"}
        assert data["forward"]["homological_degree"] == 0
