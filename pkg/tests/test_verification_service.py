"""
검증 스위트 서비스 테스트

가벼운 스위트(decat, freeness)만 끝까지 돌리고, 나머지는 작업 목록만 확인합니다.
"""

from typing import Dict, Optional

import pytest

from application.dtos.report_dto import CheckReport, SuiteReport
from application.dtos.run_config import RunConfig
from application.prebraid_service import FIRST_HEXAGON
from application.verification_service import CheckTask, VerificationService, all_braid_words, run_task
from common.enums import SuiteType, Verdict
from constants import NATURALITY_CASES, REASON_DIFFERENTIAL_SQUARE, REASON_MISMATCH, SCHEMA_VERSION
from core.ports.result_cache_port import ResultCachePort


class MemoryCache(ResultCachePort):
    """테스트용 메모리 캐시"""

    def __init__(self):
        self.store: Dict[str, dict] = {}
        self.puts = 0

    def get(self, key: str) -> Optional[dict]:
        return self.store.get(key)

    def put(self, key: str, report: dict) -> None:
        self.puts += 1
        self.store[key] = report

    def clear(self) -> None:
        self.store.clear()


@pytest.fixture
def small_config():
    return RunConfig(strands=2, max_len=2, window=(-4, 4))


class TestTaskLists:
    """스위트별 작업 목록 테스트"""

    def test_r2_covers_both_signs(self):
        tasks = VerificationService(RunConfig(strands=3)).build_tasks(SuiteType.R2)
        assert [t.args for t in tasks] == [(1, 3, "POSITIVE"), (1, 3, "NEGATIVE"), (2, 3, "POSITIVE"), (2, 3, "NEGATIVE")]

    def test_farcomm_uses_four_strands(self):
        tasks = VerificationService(RunConfig(strands=3)).build_tasks(SuiteType.FARCOMM)
        assert len(tasks) == 4
        assert all(t.args[:3] == (1, 3, 4) for t in tasks)

    def test_decat_lengths(self, small_config):
        tasks = VerificationService(small_config).build_tasks(SuiteType.DECAT)
        assert [t.args for t in tasks] == [(2, 0), (2, 1), (2, 2)]

    def test_slides_contain_atomic_and_naturality(self):
        kinds = [t.kind for t in VerificationService(RunConfig()).build_tasks(SuiteType.SLIDES)]
        assert kinds.count("atomic") == 4
        assert kinds.count("naturality") == 2 * len(NATURALITY_CASES)

    def test_hexagons_cover_both_signs(self):
        tasks = VerificationService(RunConfig()).build_tasks(SuiteType.HEXAGONS)
        assert len(tasks) == 16
        assert {t.args[-1] for t in tasks} == {"POSITIVE", "NEGATIVE"}
        assert (1, 1, 1, FIRST_HEXAGON, "NEGATIVE") in [t.args for t in tasks]

    def test_every_suite_has_tasks(self):
        service = VerificationService(RunConfig())
        for suite in SuiteType:
            assert service.build_tasks(suite), suite

    def test_all_braid_words(self):
        assert len(all_braid_words(3, 2)) == 16
        assert all_braid_words(2, 0)[0].length == 0


class TestRunning:
    """스위트 실행과 캐시 테스트"""

    def test_decat_suite_passes(self, small_config):
        report = VerificationService(small_config).run(SuiteType.DECAT)
        assert report.verdict is Verdict.PASS
        assert report.counts() == {"PASS": 3, "FAIL": 0, "INCONCLUSIVE": 0}
        assert report.to_dict()["schema"] == SCHEMA_VERSION

    def test_freeness_suite_passes(self, small_config):
        report = VerificationService(small_config).run(SuiteType.FREENESS)
        assert report.verdict is Verdict.PASS
        names = [check.name for check in report.checks]
        assert "freeness(n=2, len=2)" in names
        assert "grading(n=2, k=1, l=-1)" in names

    def test_cache_is_used(self, small_config):
        cache = MemoryCache()
        service = VerificationService(small_config, cache)
        first = service.run(SuiteType.DECAT)
        assert cache.puts == 3
        for key in cache.store:
            cache.store[key] = CheckReport("cached", Verdict.INCONCLUSIVE).to_dict()
        second = service.run(SuiteType.DECAT)
        assert first.verdict is Verdict.PASS
        assert second.verdict is Verdict.INCONCLUSIVE
        assert cache.puts == 3

    @pytest.mark.slow
    def test_r3_dimension_mismatch_fails(self, monkeypatch):
        """3 가닥 R3 의 호모토피류 차원이 고정값과 다르면 MISMATCH"""
        monkeypatch.setattr("application.verification_service.R3_CLASS_DIMENSIONS", (1, 1, 0))
        report = run_task((CheckTask("r3", "r3", (1, 3, "POSITIVE")), RunConfig(strands=3)))
        assert report.verdict is Verdict.FAIL
        assert report.reason == REASON_MISMATCH
        assert report.details["expected"] == [1, 1, 0]
        assert report.details["chain_map_dimension"] == 2

    def test_decat_rejects_nonzero_square(self, monkeypatch, small_config):
        """d∘d ≠ 0 인 복합체는 decat 에서 D_SQUARED_NONZERO"""

        def broken(word):
            raise ValueError("미분의 제곱이 0 이 아닙니다")

        monkeypatch.setattr("application.verification_service.rouquier", broken)
        report = run_task((CheckTask("decat", "decat", (2, 1)), small_config))
        assert report.verdict is Verdict.FAIL
        assert report.reason == REASON_DIFFERENTIAL_SQUARE
        assert "제곱" in report.details["error"]

    def test_run_task_records_elapsed(self, small_config):
        report = run_task((CheckTask("decat", "decat", (2, 1)), small_config))
        assert report.passed
        assert report.elapsed >= 0
        assert "elapsed" in report.to_dict(timings=True)
        assert "elapsed" not in report.to_dict()


class TestReports:
    """보고서 DTO 테스트"""

    def test_suite_verdict_combines(self):
        checks = (CheckReport("a", Verdict.PASS), CheckReport("b", Verdict.INCONCLUSIVE))
        assert SuiteReport("r3", checks).verdict is Verdict.INCONCLUSIVE

    def test_from_dict(self):
        report = CheckReport("a", Verdict.FAIL, "MISMATCH", {"word": "s1"}, 1.5)
        assert CheckReport.from_dict(report.to_dict(timings=True)) == report

    def test_from_dict_bad_verdict(self):
        with pytest.raises(ValueError, match="보고서 형식"):
            CheckReport.from_dict({"name": "a", "verdict": "MAYBE"})
