"""
단어 파싱과 단어 연산 테스트
"""

import pytest

from common.enums import CrossingSign
from core.domain.errors import WordParseError
from core.domain.words import BraidLetter, BraidWord, BSWord, parse_braid, parse_bs_word


class TestBSWord:
    """보트-사멜슨 단어 테스트"""

    def test_format(self):
        assert BSWord(3, (1, 2), -1).format() == "3:[1,2]:-1"
        assert BSWord.empty(2).format() == "2:[]:0"

    def test_letter_range(self):
        with pytest.raises(ValueError, match="범위"):
            BSWord(2, (2,))

    def test_external_moves_second_word(self):
        """⊠ 는 두 번째 단어 글자를 첫 단어 가닥 수만큼 밉니다"""
        assert BSWord(2, (1,)).external(BSWord(2, (1,))) == BSWord(4, (1, 3), 0)
        assert BSWord(2, (1,)).external(BSWord(1, (), 1)) == BSWord(3, (1,), 1)

    def test_concat(self):
        assert BSWord(3, (1,), 1).concat(BSWord(3, (2,), -2)) == BSWord(3, (1, 2), -1)
        with pytest.raises(ValueError, match="가닥 수"):
            BSWord(3, (1,)).concat(BSWord(2, (1,)))

    def test_embedded(self):
        assert BSWord(2, (1,)).embedded(1, 4) == BSWord(4, (2,))


class TestBraidWord:
    """브레이드 단어 테스트"""

    def test_inverse(self):
        word = BraidWord.positive(3, [1, 2])
        inverse = word.inverse()
        assert inverse.format() == "s2' s1'"
        assert inverse.inverse() == word

    def test_permutation_ignores_sign(self):
        assert BraidWord.negative(3, [1, 2, 1]).permutation() == BraidWord.positive(3, [2, 1, 2]).permutation()

    def test_empty_format(self):
        assert BraidWord(3).format() == ""

    def test_letter_out_of_range(self):
        with pytest.raises(ValueError, match="범위"):
            BraidWord(2, (BraidLetter(2),))


class TestParsing:
    """텍스트 파싱과 오류 위치 테스트"""

    def test_parse_braid(self):
        word = parse_braid("s1 s2' σ1", 3)
        assert word.letters == (
            BraidLetter(1),
            BraidLetter(2, CrossingSign.NEGATIVE),
            BraidLetter(1),
        )

    def test_parse_braid_inverse_power(self):
        assert parse_braid("s1^-1", 2) == BraidWord.negative(2, [1])

    def test_parse_braid_empty(self):
        assert parse_braid("", 3).length == 0

    def test_braid_index_out_of_range(self):
        with pytest.raises(WordParseError) as info:
            parse_braid("s1 s3", 3)
        assert info.value.reason == "INDEX_OUT_OF_RANGE"
        assert (info.value.line, info.value.column) == (1, 4)

    def test_braid_bad_character_on_second_line(self):
        with pytest.raises(WordParseError) as info:
            parse_braid("s1\ns2 t", 3)
        assert (info.value.line, info.value.column) == (2, 4)
        assert info.value.to_dict()["reason"] == "UNEXPECTED_CHAR"

    def test_parse_bs_word(self):
        assert parse_bs_word("3:[1,2]:-1") == BSWord(3, (1, 2), -1)
        assert parse_bs_word(" 2 : [] ") == BSWord(2, (), 0)

    def test_bs_word_index_out_of_range(self):
        with pytest.raises(WordParseError) as info:
            parse_bs_word("3:[1,3]", line=2)
        assert info.value.reason == "INDEX_OUT_OF_RANGE"
        assert (info.value.line, info.value.column) == (2, 6)

    def test_bs_word_bad_index(self):
        with pytest.raises(WordParseError) as info:
            parse_bs_word("3:[a]")
        assert info.value.reason == "BAD_INDEX"

    def test_bs_word_bad_shape(self):
        with pytest.raises(WordParseError, match="n:\\[..\\]:shift"):
            parse_bs_word("3-[1]")
