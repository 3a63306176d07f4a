"""
헤케 대수와 탈범주화 테스트
"""

import pytest

from common.enums import CrossingSign, SuiteType, Verdict
from core.domain.hecke import HeckeElement, braid_image, bs_class, mul, parabolic_include
from core.domain.value_objects import LaurentPoly, Permutation
from core.domain.words import BraidWord, parse_braid

QUANTUM_TWO = LaurentPoly.from_dict({-1: 1, 1: 1})


class TestPermutation:
    """순열 값 객체 테스트"""

    def test_braid_relation_permutation(self):
        assert Permutation.from_word([1, 2, 1], 3) == Permutation.from_word([2, 1, 2], 3)
        assert Permutation.from_word([1, 2, 1], 3).length() == 3

    def test_inverse(self):
        w = Permutation.from_word([1, 2], 3)
        assert (w * w.inverse()).is_identity()

    def test_reduced_word_roundtrip(self):
        w = Permutation((3, 1, 2))
        assert Permutation.from_word(w.reduced_word(), 3) == w
        assert len(w.reduced_word()) == w.length()

    def test_not_a_permutation(self):
        with pytest.raises(ValueError, match="순열이 아닙니다"):
            Permutation((1, 1, 2))


class TestHeckeRelations:
    """b_i 관계식 테스트"""

    def test_b_squared(self):
        """b_1² = (q + q^-1)·b_1"""
        b = HeckeElement.b(1, 2)
        assert mul(b, b) == b.scale(QUANTUM_TWO)

    def test_generator_inverse(self):
        """(b_1 − q^-1)(b_1 − q) = 1"""
        one = HeckeElement.one(2)
        b = HeckeElement.b(1, 2)
        left = b - one.scale(LaurentPoly.monomial(-1))
        right = b - one.scale(LaurentPoly.monomial(1))
        assert mul(left, right) == one

    def test_braid_relation_image(self):
        assert braid_image(parse_braid("s1 s2 s1", 3)) == braid_image(parse_braid("s2 s1 s2", 3))

    def test_far_commutation_image(self):
        assert braid_image(parse_braid("s1 s3", 4)) == braid_image(parse_braid("s3 s1", 4))

    def test_inverse_word_image(self):
        word = parse_braid("s1 s2' s1", 3)
        assert braid_image(word) * braid_image(word.inverse()) == HeckeElement.one(3)

    def test_bs_class_shift(self):
        """q^shift·b_1"""
        assert bs_class(2, [1], 1) == HeckeElement.b(1, 2).shifted(1)

    def test_parabolic_include(self):
        """T_1 ⊗ 1 = T_1 (세 가닥)"""
        included = parabolic_include(HeckeElement.generator(1, 2), HeckeElement.one(1))
        assert included == HeckeElement.generator(1, 3)
        assert parabolic_include(HeckeElement.one(1), HeckeElement.generator(1, 2)) == HeckeElement.generator(2, 3)


class TestHeckeFormat:
    """텍스트 표기 테스트"""

    def test_unit_prints_one(self):
        assert braid_image(parse_braid("s1 s1'", 2)).format() == "1"

    def test_b_format(self):
        assert HeckeElement.b(1, 2).format() == "q^-1·T[] + 1·T[1]"

    def test_to_dict(self):
        assert HeckeElement.generator(1, 2).to_dict() == {"T[1]": "1"}

    def test_different_strands_rejected(self):
        with pytest.raises(ValueError, match="가닥 수"):
            HeckeElement.one(2) + HeckeElement.one(3)


class TestEnums:
    """열거형 테스트"""

    def test_crossing_sign_parse(self):
        assert CrossingSign.parse("neg") is CrossingSign.NEGATIVE
        assert CrossingSign.POSITIVE.inverted() is CrossingSign.NEGATIVE
        with pytest.raises(ValueError, match="교차 부호"):
            CrossingSign.parse("?")

    def test_suite_parse(self):
        assert SuiteType.parse(" R3 ") is SuiteType.R3
        with pytest.raises(ValueError, match="스위트"):
            SuiteType.parse("r4")

    def test_verdict_combine(self):
        assert Verdict.combine([Verdict.PASS, Verdict.INCONCLUSIVE]) is Verdict.INCONCLUSIVE
        assert Verdict.combine([Verdict.INCONCLUSIVE, Verdict.FAIL]) is Verdict.FAIL
        assert Verdict.combine([]) is Verdict.PASS

    def test_braid_word_unused_strands(self):
        assert BraidWord(3).permutation().is_identity()
