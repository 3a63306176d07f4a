"""
호모토피 동치 탐색, 호모토피류 공간, 슬라이드 테스트

격자 탐색이 무거운 경우는 slow 로 표시합니다 (pytest -m "not slow" 로 건너뜀).
"""

from fractions import Fraction

import pytest

from common.enums import CrossingSign
from constants import R3_CLASS_DIMENSIONS
from core.domain.complex import ChainMap, Complex, Homotopy, identity_map
from core.domain.equivalence import (
    HomotopyEquivalence,
    commutation_normal_form,
    find_homotopy_equivalence,
    find_relabeling_isomorphism,
    lattice_points,
)
from core.domain.homotopy import homotopic_multiple, homotopy_class_space, null_homotopy
from core.domain.rouquier import rouquier
from core.domain.slides import AtomicConfig, atomic_slide, slide, swapped_word
from core.domain.words import BSWord, parse_braid


def F(text: str, strands: int) -> Complex:
    return rouquier(parse_braid(text, strands))


class TestLattice:
    """격자 점 열거 테스트"""

    def test_lattice_points_skip_zero(self):
        points = list(lattice_points(2, 1))
        assert (0, 0) not in points
        assert len(points) == 8
        assert all(abs(c) <= 1 for point in points for c in point)

    def test_lattice_points_by_norm(self):
        norms = [sum(abs(c) for c in point) for point in lattice_points(2, 2)]
        assert norms == sorted(norms)

    def test_commutation_normal_form(self):
        assert commutation_normal_form((3, 1)) == commutation_normal_form((1, 3))
        assert commutation_normal_form((2, 1)) != commutation_normal_form((1, 2))


class TestEquivalenceSearch:
    """동치 탐색 테스트"""

    def test_identical_complexes(self):
        search = find_homotopy_equivalence(F("s1", 2), F("s1", 2))
        assert search.found
        assert search.method == "identity"

    def test_reidemeister_two(self):
        search = find_homotopy_equivalence(F("s1 s1'", 2), Complex.unit(2))
        assert search.found
        assert search.class_dimension == 1
        assert search.equivalence.verify()

    def test_far_commutation_is_relabeling(self):
        isomorphism = find_relabeling_isomorphism(F("s1 s3", 4), F("s3 s1", 4))
        assert isomorphism is not None
        assert isomorphism.verify()
        assert find_homotopy_equivalence(F("s1 s3'", 4), F("s3' s1", 4)).method == "relabel"

    def test_different_braids_not_found(self):
        search = find_homotopy_equivalence(F("s1", 3), F("s2", 3))
        assert not search.found
        assert search.equivalence is None

    def test_inverse_and_composition(self):
        equivalence = find_homotopy_equivalence(F("s1' s1", 2), Complex.unit(2)).equivalence
        assert equivalence.inverse().verify()
        assert equivalence.then(equivalence.inverse()).verify()

    def test_shifted_equivalence(self):
        equivalence = HomotopyEquivalence.identity(F("s1", 2)).shifted(3)
        assert equivalence.verify()
        assert equivalence.source.same_as(F("s1", 2).shifted(3))

    @pytest.mark.slow
    def test_braid_relation(self):
        """세 가닥 브레이드 관계: 몫 공간 1 차원, 동치 존재"""
        search = find_homotopy_equivalence(F("s1 s2 s1", 3), F("s2 s1 s2", 3))
        assert search.found
        assert search.class_dimension == 1
        assert search.equivalence.verify()


class TestHomotopyClasses:
    """호모토피류 공간 테스트"""

    def test_invertible_complex_endomorphisms(self):
        space = homotopy_class_space(F("s1", 2), F("s1", 2))
        assert space.dimension == 1
        assert space.chain_map_dimension >= space.dimension

    def test_zero_map_has_zero_homotopy(self):
        complex_ = F("s1", 2)
        h = null_homotopy(ChainMap.zero(complex_, complex_))
        assert h == Homotopy.zero(complex_, complex_)
        assert h.degree == -1

    def test_identity_is_not_null_homotopic(self):
        """F(σ1) 은 가역이라 항등 사상이 영호모토픽일 수 없음"""
        assert null_homotopy(identity_map(F("s1", 2))) is None

    def test_inverse_pair_difference_has_witness(self):
        """F(σ1 σ1') ≃ R 에서 g∘f − id 를 정확히 푸는 h"""
        source = F("s1 s1'", 2)
        equivalence = find_homotopy_equivalence(source, Complex.unit(2)).equivalence
        difference = equivalence.backward.compose(equivalence.forward) - identity_map(source)
        witness = null_homotopy(difference)
        assert witness is not None
        assert witness.boundary() == difference

    def test_null_homotopy_needs_degree_zero(self):
        unit = Complex.unit(2)
        with pytest.raises(ValueError, match="차수 0"):
            null_homotopy(Homotopy.zero(unit, unit))

    @pytest.mark.slow
    def test_braid_relation_class_space(self):
        """세 가닥 R3: 사슬 사상 2 차원 중 영호모토픽 1 차원, 몫 1 차원"""
        space = homotopy_class_space(F("s1 s2 s1", 3), F("s2 s1 s2", 3))
        assert (space.dimension, space.chain_map_dimension, space.null_homotopic_dimension) == R3_CLASS_DIMENSIONS
        assert space.dimension == 1
        assert space.chain_map_dimension == 2
        assert len(space.representatives) == 1

    def test_homotopic_multiple(self):
        identity = identity_map(Complex.unit(2))
        scalar, _ = homotopic_multiple(identity.scale(2), identity)
        assert scalar == Fraction(2)

    def test_homotopic_multiple_needs_degree_zero(self):
        identity = identity_map(Complex.unit(2))
        with pytest.raises(ValueError, match="차수 0"):
            homotopic_multiple(Homotopy.zero(Complex.unit(2), Complex.unit(2)), identity)


class TestSlides:
    """슬라이드 테스트"""

    def test_atomic_config_cases(self):
        assert AtomicConfig(1, 2).pair == (2, 1)
        assert AtomicConfig(2, 1).generator == 1
        with pytest.raises(ValueError, match="원자 슬라이드"):
            AtomicConfig(1, 1)

    def test_swapped_word(self):
        assert swapped_word(BSWord(2, (1,)), BSWord(1, (), 1)) == BSWord(3, (2,), 1)

    def test_slide_with_empty_side(self):
        """한쪽 가닥이 0 이면 케이블 교차는 R, 슬라이드는 항등"""
        result = slide(BSWord(2, (1,)), BSWord.empty(0))
        assert result.atomic_steps == 0
        assert result.equivalence.verify()

    @pytest.mark.slow
    @pytest.mark.parametrize("sign", [CrossingSign.POSITIVE, CrossingSign.NEGATIVE])
    @pytest.mark.parametrize("m, n", [(1, 2), (2, 1)])
    def test_atomic_slide(self, m, n, sign):
        assert atomic_slide(AtomicConfig(m, n, sign)).verify()

    @pytest.mark.slow
    def test_slide_one_generator(self):
        result = slide(BSWord(2, (1,)), BSWord(1))
        assert result.atomic_steps >= 1
        assert result.target_word == BSWord(3, (2,))
        assert result.equivalence.verify()
