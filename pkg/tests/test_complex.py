"""
복합체, 루키에 복합체, 호몰로지, 가우스 소거 테스트
"""

import pytest

from common.enums import CrossingSign
from core.domain.complex import BlockMatrix, Complex, Summand, cone, euler_characteristic, is_chain_map, star
from core.domain.gaussian import gaussian_eliminate
from core.domain.generators import dot, unit_dot
from core.domain.hecke import HeckeElement, braid_image
from core.domain.homology import degreewise_homology_dims
from core.domain.rouquier import (
    cabled_crossing,
    cabled_word,
    coxeter_form,
    embedded_complex,
    hloc_map,
    literal_form,
    rouquier,
)
from core.domain.value_objects import Permutation
from core.domain.words import parse_braid

POSITIVE, NEGATIVE = CrossingSign.POSITIVE, CrossingSign.NEGATIVE


def F(text: str, strands: int) -> Complex:
    return rouquier(parse_braid(text, strands))


class TestComplexBasics:
    """복합체 기본 연산 테스트"""

    def test_unit_pretty(self):
        assert Complex.unit(2).pretty() == "R @ 0"
        assert Complex.zero(2).pretty() == "0"

    def test_generator_pretty(self):
        lines = F("s1", 2).pretty().splitlines()
        assert lines[0] == "B1 @ 0"
        assert lines[-1] == "R⟨-1⟩ @ 1"
        assert lines[1].strip().startswith("d(0→0): B1 → R⟨-1⟩")

    def test_negative_generator_degrees(self):
        complex_ = F("s1'", 2)
        assert complex_.degrees() == [-1, 0]
        assert complex_.at(-1)[0].format() == "R⟨1⟩"

    @pytest.mark.parametrize("text", ["s1", "s1'", "s1 s2", "s1 s2' s1", "s2 s1 s2 s1'"])
    def test_square_zero(self, text):
        complex_ = F(text, 3)
        assert complex_.square_zero()
        assert complex_.validated() is complex_

    def test_nonzero_square_is_rejected(self):
        top = Summand(2, (), 1, None, (0,))
        middle = Summand(2, (1,), 0, None, (1,))
        bottom = Summand(2, (), -1, None, (2,))
        first = unit_dot(1, 2).reframed(top.module(), middle.module())
        second = dot(1, 2).reframed(middle.module(), bottom.module())
        objects = {-1: (top,), 0: (middle,), 1: (bottom,)}
        differential = {
            -1: BlockMatrix((middle,), (top,), {(0, 0): first}),
            0: BlockMatrix((bottom,), (middle,), {(0, 0): second}),
        }
        with pytest.raises(ValueError, match="제곱이 0 이 아닙니다"):
            Complex(2, objects, differential)

    def test_unit_is_neutral(self):
        complex_ = F("s1 s2", 3)
        assert star([Complex.unit(3), complex_], 3).same_as(complex_)
        assert star([complex_, Complex.unit(3)], 3).same_as(complex_)

    def test_star_is_strictly_associative(self):
        a, b, c = F("s1", 3), F("s2'", 3), F("s1", 3)
        assert star([star([a, b], 3), c], 3).same_as(star([a, star([b, c], 3)], 3))

    def test_word_concatenation(self):
        assert F("s1 s2 s1", 3).same_as(star([F("s1 s2", 3), F("s1", 3)], 3))

    def test_shift_moves_every_summand(self):
        shifted = F("s1", 2).shifted(2)
        assert [s.shift for s in shifted.at(0)] == [2]
        assert [s.shift for s in shifted.at(1)] == [1]
        assert shifted.shifted(-2).same_as(F("s1", 2))

    def test_strand_mismatch(self):
        with pytest.raises(ValueError, match="가닥 수"):
            star([F("s1", 2), F("s1", 3)], 3)

    def test_permutation_summand(self):
        s = Summand(2, (), 1, Permutation.transposition(1, 2))
        assert s.format() == "R_[2,1]⟨1⟩"
        assert Summand(2, (), 0, Permutation.identity(2)).permutation is None
        with pytest.raises(ValueError, match="순열 쌍가군"):
            Summand(2, (1,), 0, Permutation.transposition(1, 2))


class TestDecategorification:
    """오일러 지표 = 헤케 대수 상"""

    @pytest.mark.parametrize("text", ["", "s1", "s1'", "s1 s2 s1", "s1 s2' s1 s2", "s2' s2'"])
    def test_euler_matches_braid_image(self, text):
        word = parse_braid(text, 3)
        assert euler_characteristic(rouquier(word)) == braid_image(word)

    def test_unit_euler(self):
        assert Complex.unit(3).euler_characteristic() == HeckeElement.one(3)

    def test_permutation_summand_has_no_euler(self):
        twisted = Complex.single(Summand(2, (), 0, Permutation.transposition(1, 2)))
        with pytest.raises(ValueError, match="오일러"):
            twisted.euler_characteristic()


class TestCabledCrossing:
    """케이블 교차와 콕세터 분해 테스트"""

    def test_cabled_words(self):
        assert cabled_word(2, 1).format() == "s1 s2"
        assert cabled_word(1, 2).format() == "s2 s1"
        assert cabled_word(1, 2, NEGATIVE).format() == "s2' s1'"
        assert cabled_word(2, 1, NEGATIVE).format() == "s1' s2'"

    def test_negative_is_inverse_of_swapped(self):
        assert cabled_word(1, 2, NEGATIVE) == cabled_word(2, 1).inverse()

    def test_single_crossing_shift(self):
        crossing = cabled_crossing(1, 1)
        assert crossing.at(0)[0].format() == "B1⟨-1⟩"
        assert crossing.at(1)[0].format() == "R⟨-2⟩"
        assert cabled_crossing(1, 1, NEGATIVE).at(-1)[0].format() == "R⟨2⟩"

    @pytest.mark.parametrize("m, n", [(0, 3), (2, 0), (0, 0)])
    def test_degenerate_crossing_is_unit(self, m, n):
        assert cabled_crossing(m, n).same_as(Complex.unit(m + n))

    def test_negative_strands_rejected(self):
        with pytest.raises(ValueError, match="0 이상"):
            cabled_crossing(-1, 2)

    @pytest.mark.parametrize("sign", [POSITIVE, NEGATIVE])
    @pytest.mark.parametrize("m, n", [(2, 1), (1, 2)])
    def test_literal_coxeter_form(self, m, n, sign):
        """글자 그대로의 분해는 케이블 교차와 같은 복합체"""
        assert coxeter_form(m, n, sign, literal_form(sign)).same_as(cabled_crossing(m, n, sign))

    @pytest.mark.slow
    @pytest.mark.parametrize("sign", [POSITIVE, NEGATIVE])
    def test_literal_coxeter_form_two_by_two(self, sign):
        assert coxeter_form(2, 2, sign, literal_form(sign)).same_as(cabled_crossing(2, 2, sign))

    def test_embedded_complex(self):
        assert embedded_complex(F("s1", 2), 1, 0).same_as(F("s2", 3))
        assert embedded_complex(F("s1", 2), 0, 1).same_as(F("s1", 3))


class TestHomology:
    """내부 차수별 호몰로지 테스트"""

    def test_polynomial_ring_homology(self):
        table = degreewise_homology_dims(Complex.unit(1), (0, 4))
        assert table.nonzero() == [(0, 0, 1), (2, 0, 1), (4, 0, 1)]
        assert not table.is_exact()

    def test_reidemeister_two_homology(self):
        """F(σ1 σ1^-1) 의 호몰로지는 R 의 것"""
        table = degreewise_homology_dims(F("s1 s1'", 2), (-2, 2))
        assert table.nonzero() == [(0, 0, 1), (2, 0, 2)]

    def test_bad_window(self):
        with pytest.raises(ValueError, match="차수 창"):
            degreewise_homology_dims(Complex.unit(1), (2, 0))

    @pytest.mark.parametrize("sign", [POSITIVE, NEGATIVE])
    def test_hloc_cone_is_exact(self, sign):
        f = hloc_map(1, 1, sign)
        assert is_chain_map(f)
        assert degreewise_homology_dims(cone(f), (-4, 4)).is_exact()

    def test_to_dict(self):
        table = degreewise_homology_dims(Complex.unit(1), (0, 1))
        assert table.to_dict() == {"0": {"0": 1}, "1": {"0": 0}}


class TestGaussianElimination:
    """가우스 소거 테스트"""

    def test_reidemeister_two_reduces_to_unit(self):
        result = gaussian_eliminate(F("s1 s1'", 2))
        assert result.reduced.same_as(Complex.unit(2))
        assert result.splits == 1
        assert result.cancellations == 2
        assert result.equivalence.verify()

    def test_generator_is_already_minimal(self):
        result = gaussian_eliminate(F("s1", 2))
        assert result.reduced.same_as(F("s1", 2))
        assert result.cancellations == 0

    @pytest.mark.parametrize("text", ["s1 s2 s1", "s1' s2 s1"])
    def test_euler_characteristic_is_preserved(self, text):
        """소거 전후 χ 가 같음"""
        complex_ = F(text, 3)
        result = gaussian_eliminate(complex_)
        assert result.reduced.euler_characteristic() == complex_.euler_characteristic()
        assert result.reduced.summand_count() <= complex_.summand_count()
