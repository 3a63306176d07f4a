"""
프리브레이딩 검사 서비스 테스트
"""

import pytest

from application.prebraid_service import FIRST_HEXAGON, SECOND_HEXAGON, PrebraidService
from common.enums import CrossingSign, Verdict
from constants import REASON_NOT_FOUND_WITHIN_LATTICE, REASON_OK, REASON_WITNESS_REJECTED, TRANSITIVE_TRIPLES
from core.domain.complex import identity_map
from core.domain.equivalence import EquivalenceSearch, find_homotopy_equivalence
from core.domain.homotopy import null_homotopy
from core.domain.words import BSWord


@pytest.fixture
def service():
    return PrebraidService(lattice_bound=2, window=(-4, 4))


class TestEquivalenceReport:
    """탐색 결과 → 판정 변환 테스트"""

    def test_not_found_is_inconclusive(self, service):
        search = EquivalenceSearch(None, REASON_NOT_FOUND_WITHIN_LATTICE, "lattice", 5)
        report = service.equivalence_report("case", search, {"word": "s1"})
        assert report.verdict is Verdict.INCONCLUSIVE
        assert report.details["lattice_bound"] == 2
        assert report.details["candidates_tried"] == 5

    def test_rejected_witness_is_fail(self, service):
        search = EquivalenceSearch(None, REASON_WITNESS_REJECTED, "lattice")
        assert service.equivalence_report("case", search, {}).verdict is Verdict.FAIL


class TestHexagons:
    """육각형 공리 테스트"""

    @pytest.mark.parametrize("sign", [CrossingSign.POSITIVE, CrossingSign.NEGATIVE])
    @pytest.mark.parametrize("hexagon", [FIRST_HEXAGON, SECOND_HEXAGON])
    def test_single_strands(self, service, hexagon, sign):
        """한 가닥씩이면 두 변이 같은 단어 (음의 교차도 마찬가지)"""
        report = service.hexagon_check(1, 1, 1, hexagon, sign)
        assert report.verdict is Verdict.PASS
        assert report.reason == REASON_OK
        assert report.details["method"] == "identity"

    @pytest.mark.parametrize("hexagon", [FIRST_HEXAGON, SECOND_HEXAGON])
    def test_round_trip_difference_has_witness(self, service, hexagon):
        """(1,1,1) 육각형 두 변 사이 동치의 g∘f − id 는 영호모토픽"""
        direct, steps = service.hexagon_sides(1, 1, 1, hexagon, CrossingSign.POSITIVE)
        equivalence = find_homotopy_equivalence(direct, steps).equivalence
        difference = equivalence.backward.compose(equivalence.forward) - identity_map(direct)
        witness = null_homotopy(difference)
        assert witness is not None
        assert witness.boundary() == difference

    @pytest.mark.parametrize("a, b, c", [(0, 1, 1), (1, 0, 1), (1, 1, 0)])
    def test_zero_strand_factor(self, service, a, b, c):
        assert service.hexagon_check(a, b, c, FIRST_HEXAGON).passed
        assert service.hexagon_check(a, b, c, SECOND_HEXAGON).passed

    def test_negative_strands_rejected(self, service):
        with pytest.raises(ValueError, match="0 이상"):
            service.hexagon_check(-1, 1, 1)

    def test_unknown_hexagon(self, service):
        with pytest.raises(ValueError, match="육각형"):
            service.hexagon_sides(1, 1, 1, "third", CrossingSign.POSITIVE)

    @pytest.mark.slow
    @pytest.mark.parametrize("a, b, c", [(2, 1, 1), (1, 2, 1), (1, 1, 2)])
    def test_larger_hexagons(self, service, a, b, c):
        assert service.hexagon_check(a, b, c, FIRST_HEXAGON).passed
        assert service.hexagon_check(a, b, c, SECOND_HEXAGON).passed


class TestCoxeterAndHloc:
    """콕세터 분해와 순열 쌍가군 호환성 테스트"""

    @pytest.mark.parametrize("sign", [CrossingSign.POSITIVE, CrossingSign.NEGATIVE])
    @pytest.mark.parametrize("m, n", [(2, 1), (1, 2)])
    def test_coxeter_factorization(self, service, m, n, sign):
        report = service.coxeter_factorization_check(m, n, sign)
        assert report.verdict is Verdict.PASS

    @pytest.mark.parametrize("sign", [CrossingSign.POSITIVE, CrossingSign.NEGATIVE])
    def test_hloc_single_crossing(self, service, sign):
        report = service.hloc_compatibility(1, 1, sign)
        assert report.verdict is Verdict.PASS
        assert report.details["nonzero"] == []


class TestNaturalityAndTransitivity:
    """슬라이드 자연성과 추이성 테스트 (무거움)"""

    def test_transitive_needs_three_words(self, service):
        with pytest.raises(ValueError, match="세 개"):
            service.transitive_check(["s1", "s1"])

    def test_transitive_rejects_different_braids(self, service):
        report = service.transitive_check(["s1", "s2", "s1"])
        assert report.verdict is Verdict.FAIL

    @pytest.mark.slow
    def test_naturality_single_generator(self, service):
        report = service.naturality_check(BSWord(2, (1,)), BSWord(1))
        assert report.verdict is Verdict.PASS

    @pytest.mark.slow
    def test_transitive_reidemeister_two(self, service):
        report = service.transitive_check(TRANSITIVE_TRIPLES[0])
        assert report.verdict is Verdict.PASS
        assert report.details["scalar"] != "0"
