"""
다항식환과 로랑 다항식 단위 테스트
"""

from fractions import Fraction

import pytest

from common.enums import ArithmeticKind
from core.domain.errors import WordParseError
from core.domain.poly import Poly, arith, monomials_of_degree, parse_poly
from core.domain.value_objects import LaurentPoly, Permutation


def x(j: int, n: int = 3) -> Poly:
    return Poly.variable(n, j)


class TestPolyArithmetic:
    """정확한 산술 테스트"""

    def test_arith_kinds(self):
        """덧셈, 뺄셈, 곱셈"""
        p, q = x(1), x(2)
        assert arith(p, q, ArithmeticKind.ADD) == p + q
        assert arith(p, q, ArithmeticKind.SUB).coefficient((1, 0, 0)) == 1
        assert arith(p, q, ArithmeticKind.SUB).coefficient((0, 1, 0)) == -1
        assert arith(p, q, ArithmeticKind.MUL).coefficient((1, 1, 0)) == 1

    def test_different_rings_rejected(self):
        """변수 개수가 다르면 ValueError"""
        with pytest.raises(ValueError, match="변수 개수"):
            arith(x(1, 2), x(1, 3), ArithmeticKind.ADD)

    def test_rational_coefficients(self):
        """유리수 계수는 정확히 유지"""
        p = x(1) * Fraction(1, 3) + x(1) * Fraction(2, 3)
        assert p == x(1)
        assert p.coefficient((1, 0, 0)) == Fraction(1)

    def test_homogeneous_degree(self):
        """변수 하나는 내부 차수 2"""
        assert x(1).homogeneous_degree() == 2
        assert (x(1) * x(2)).homogeneous_degree() == 4
        assert (x(1) + 1).homogeneous_degree() is None
        assert Poly.zero(3).is_homogeneous(6)

    def test_monomials_of_degree(self):
        """두 변수 2 차 단항식은 세 개"""
        assert monomials_of_degree(2, 2) == ((2, 0), (1, 1), (0, 2))
        assert monomials_of_degree(0, 0) == ((),)
        assert monomials_of_degree(3, -1) == ()


class TestSymmetricAction:
    """대칭군 작용과 불변 분해 테스트"""

    def test_transposition_swaps_variables(self):
        assert x(1).act_transposition(1) == x(2)
        assert x(3).act_transposition(1) == x(3)

    def test_reflection_out_of_range(self):
        with pytest.raises(ValueError, match="단순 호환"):
            x(1).act_transposition(3)

    def test_invariant_split(self):
        """x1 = (x1+x2)/2 + α_1·(1/2)"""
        even, odd = x(1).invariant_split(1)
        assert even == (x(1) + x(2)) * Fraction(1, 2)
        assert odd == Poly.constant(3, Fraction(1, 2))
        assert even.is_invariant(1)
        assert even + Poly.root(3, 1) * odd == x(1)

    def test_invariant_split_of_invariant(self):
        """불변 다항식의 홀수 부분은 0"""
        p = x(1) * x(2) + x(3)
        even, odd = p.invariant_split(1)
        assert even == p
        assert odd.is_zero()

    def test_demazure(self):
        """∂_1(x1) = 1, ∂_1(x1²) = x1 + x2"""
        assert x(1).demazure(1) == Poly.one(3)
        assert (x(1) ** 2).demazure(1) == x(1) + x(2)

    def test_permuted(self):
        """x_j ↦ x_{w(j)}"""
        w = Permutation.transposition(2, 3)
        assert x(2).permuted(w) == x(3)

    def test_reindexed(self):
        """포물형 매장: x1 ↦ x3"""
        assert x(1, 2).reindexed(2, 4) == Poly.variable(4, 3)
        with pytest.raises(ValueError, match="매장 범위"):
            x(1, 2).reindexed(3, 4)


class TestParsePoly:
    """다항식 텍스트 파싱 테스트"""

    def test_parse_and_format(self):
        text = "x1^2 - 1/2*x1*x2 + 3"
        p = parse_poly(text, 2)
        assert p.format() == text
        assert p.coefficient((1, 1)) == Fraction(-1, 2)

    def test_zero_format(self):
        assert Poly.zero(2).format() == "0"

    def test_empty_text(self):
        with pytest.raises(WordParseError) as info:
            parse_poly("   ", 2)
        assert info.value.reason == "EMPTY"

    def test_variable_out_of_range(self):
        with pytest.raises(WordParseError) as info:
            parse_poly("x1 + x5", 2)
        assert info.value.reason == "BAD_VARIABLE"
        assert info.value.column == 6

    def test_zero_denominator(self):
        with pytest.raises(WordParseError) as info:
            parse_poly("1/0*x1", 2)
        assert info.value.reason == "BAD_RATIONAL"

    def test_missing_operator(self):
        """항 사이에 연산자가 없으면 위치와 함께 오류"""
        with pytest.raises(WordParseError) as info:
            parse_poly("x1 x2", 2, line=4)
        assert info.value.reason == "UNEXPECTED_CHAR"
        assert (info.value.line, info.value.column) == (4, 4)


class TestLaurentPoly:
    """ℤ[q, q^-1] 테스트"""

    def test_format(self):
        quantum_two = LaurentPoly.from_dict({-1: 1, 1: 1})
        assert quantum_two.format() == "q^-1 + q"
        assert LaurentPoly.zero().format() == "0"

    def test_parse_format(self):
        text = "-q^-2 + 3 - 2*q"
        assert LaurentPoly.parse(text).format() == text

    def test_multiplication(self):
        """(q^-1 + q)² = q^-2 + 2 + q^2"""
        quantum_two = LaurentPoly.from_dict({-1: 1, 1: 1})
        assert quantum_two**2 == LaurentPoly.from_dict({-2: 1, 0: 2, 2: 1})
        assert quantum_two.evaluate_at_one() == 2

    def test_zero_coefficient_rejected(self):
        with pytest.raises(ValueError, match="계수 0"):
            LaurentPoly(((0, 0),))
