"""
다항식환 R_n = ℚ[x_1, …, x_n]

각 변수의 내부 차수를 2 로 두는 등급 다항식환의 정확한 산술을 제공합니다.
계수 연산은 sympy 의 희소 다항식(PolyRing over QQ)에 맡기고,
여기서는 대칭군 작용과 불변 분해 p = e + α_i·o 를 얹습니다.
"""

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple, Union

from sympy import QQ
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, PolyRing

from common.enums import ArithmeticKind
from constants import VARIABLE_DEGREE, VARIABLE_PREFIX

from .errors import WordParseError
from .value_objects import Permutation

Exponent = Tuple[int, ...]
Scalar = Union[int, Fraction]


@lru_cache(maxsize=None)
def polynomial_ring(nvars: int) -> PolyRing:
    """x1..xn 변수, grlex 순서의 ℚ 계수 다항식환"""
    if nvars < 0:
        raise ValueError(f"변수 개수는 0 이상이어야 합니다: {nvars}")
    names = ",".join(f"{VARIABLE_PREFIX}{j}" for j in range(1, nvars + 1))
    return PolyRing(names, QQ, grlex)


def to_qq(value):
    """int / Fraction / QQ 원소를 QQ 원소로"""
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, int):
        return QQ(value)
    return QQ.convert(value)


def to_fraction(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


@lru_cache(maxsize=None)
def monomials_of_degree(nvars: int, total: int) -> Tuple[Exponent, ...]:
    """지수 합이 total 인 단항식 지수들 (grlex 내림차순)"""
    if total < 0:
        return ()
    if nvars == 0:
        return ((),) if total == 0 else ()
    result = []
    for combo in itertools.combinations_with_replacement(range(nvars), total):
        exps = [0] * nvars
        for j in combo:
            exps[j] += 1
        result.append(tuple(exps))
    return tuple(sorted(result, reverse=True))


@dataclass(frozen=True)
class Poly:
    """R_n 의 원소 (불변)

    element 는 nvars 개 생성원의 sympy PolyElement 이며 계수 0 인 항은 없습니다.
    """

    nvars: int
    element: PolyElement = field(repr=False)

    def __post_init__(self):
        if self.nvars < 0:
            raise ValueError(f"변수 개수는 0 이상이어야 합니다: {self.nvars}")
        if self.element.ring.ngens != self.nvars:
            raise ValueError(
                f"다항식환 생성원 수가 맞지 않습니다: {self.element.ring.ngens} != {self.nvars}"
            )

    # 생성
    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls(nvars, polynomial_ring(nvars).zero)

    @classmethod
    def one(cls, nvars: int) -> "Poly":
        return cls(nvars, polynomial_ring(nvars).one)

    @classmethod
    def constant(cls, nvars: int, value: Scalar) -> "Poly":
        ring = polynomial_ring(nvars)
        return cls(nvars, ring.ground_new(to_qq(value)))

    @classmethod
    def variable(cls, nvars: int, j: int) -> "Poly":
        """x_j (1부터)"""
        if not 1 <= j <= nvars:
            raise ValueError(f"변수 번호가 범위를 벗어났습니다: x{j} (n={nvars})")
        return cls(nvars, polynomial_ring(nvars).gens[j - 1])

    @classmethod
    def root(cls, nvars: int, i: int) -> "Poly":
        """단순 쌍대근 α_i = x_i − x_{i+1}"""
        _check_reflection(i, nvars)
        return cls.variable(nvars, i) - cls.variable(nvars, i + 1)

    @classmethod
    def from_terms(cls, nvars: int, terms: Dict[Exponent, Scalar]) -> "Poly":
        ring = polynomial_ring(nvars)
        return cls(nvars, ring.from_dict({exp: to_qq(c) for exp, c in terms.items()}))

    # 조회
    def is_zero(self) -> bool:
        return not self.element

    def is_constant(self) -> bool:
        return all(sum(exp) == 0 for exp in self.element.keys())

    def constant_value(self) -> Fraction:
        """상수항 (상수 다항식이 아니면 ValueError)"""
        if not self.is_constant():
            raise ValueError(f"상수 다항식이 아닙니다: {self}")
        return to_fraction(self.element.get(self.element.ring.zero_monom, QQ(0)))

    def terms(self) -> Dict[Exponent, Fraction]:
        """지수 벡터 → 유리수 계수"""
        return {exp: to_fraction(c) for exp, c in self.element.items()}

    def items(self):
        """(지수, QQ 계수) 쌍 (선형대수용, 변환 없이)"""
        return self.element.items()

    def coefficient(self, exponent: Exponent) -> Fraction:
        return to_fraction(self.element.get(tuple(exponent), QQ(0)))

    def homogeneous_degree(self) -> Optional[int]:
        """동차이면 내부 차수, 0 이거나 비동차이면 None"""
        degrees = {VARIABLE_DEGREE * sum(exp) for exp in self.element.keys()}
        if len(degrees) != 1:
            return None
        return degrees.pop()

    def is_homogeneous(self, degree: Optional[int] = None) -> bool:
        """0 은 모든 차수에서 동차로 봅니다."""
        if self.is_zero():
            return True
        actual = self.homogeneous_degree()
        if actual is None:
            return False
        return degree is None or actual == degree

    # 산술
    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError(f"변수 개수가 다른 다항식입니다: {self.nvars} != {other.nvars}")
            return other
        return Poly.constant(self.nvars, other)

    def __add__(self, other) -> "Poly":
        return Poly(self.nvars, self.element + self._coerce(other).element)

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        return Poly(self.nvars, self.element - self._coerce(other).element)

    def __rsub__(self, other) -> "Poly":
        return Poly(self.nvars, self._coerce(other).element - self.element)

    def __neg__(self) -> "Poly":
        return Poly(self.nvars, -self.element)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, Poly):
            return Poly(self.nvars, self.element * self._coerce(other).element)
        if other == 0:
            return Poly.zero(self.nvars)
        return Poly(self.nvars, self.element * to_qq(other))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise ValueError(f"음수 거듭제곱은 지원하지 않습니다: {exponent}")
        return Poly(self.nvars, self.element**exponent)

    # 대칭군 작용
    def act_transposition(self, i: int) -> "Poly":
        """s_i: x_i 와 x_{i+1} 교환"""
        _check_reflection(i, self.nvars)
        swapped = {}
        for exp, c in self.element.items():
            new = list(exp)
            new[i - 1], new[i] = new[i], new[i - 1]
            swapped[tuple(new)] = c
        return Poly(self.nvars, self.element.ring.from_dict(swapped))

    def permuted(self, w: Permutation) -> "Poly":
        """w 작용: x_j ↦ x_{w(j)}"""
        if w.size != self.nvars:
            raise ValueError(f"순열 크기와 변수 개수가 다릅니다: {w.size} != {self.nvars}")
        moved = {}
        for exp, c in self.element.items():
            new = [0] * self.nvars
            for j, e in enumerate(exp, start=1):
                new[w(j) - 1] = e
            moved[tuple(new)] = c
        return Poly(self.nvars, self.element.ring.from_dict(moved))

    def is_invariant(self, i: int) -> bool:
        return self.act_transposition(i) == self

    def invariant_split(self, i: int) -> Tuple["Poly", "Poly"]:
        """p = even + α_i·odd, even 과 odd 는 s_i 불변

        even = (p + s_i p)/2, odd = (p − s_i p)/(2α_i).
        """
        reflected = self.act_transposition(i)
        half = QQ(1, 2)
        even = Poly(self.nvars, (self.element + reflected.element) * half)
        difference = self.element - reflected.element
        if not difference:
            return even, Poly.zero(self.nvars)
        alpha = Poly.root(self.nvars, i).element
        quotient, remainder = difference.div(alpha)
        if remainder:
            raise ArithmeticError(f"α_{i} 로 나누어떨어지지 않습니다: {self}")
        return even, Poly(self.nvars, quotient * half)

    def demazure(self, i: int) -> "Poly":
        """∂_i(p) = (p − s_i p)/α_i"""
        _, odd = self.invariant_split(i)
        return odd * 2

    def reindexed(self, offset: int, new_nvars: int) -> "Poly":
        """x_j ↦ x_{j+offset}, nvars → new_nvars (포물형 매장)"""
        if offset < 0 or offset + self.nvars > new_nvars:
            raise ValueError(
                f"매장 범위가 잘못되었습니다: offset={offset}, n={self.nvars}, 새 n={new_nvars}"
            )
        ring = polynomial_ring(new_nvars)
        tail = new_nvars - offset - self.nvars
        moved = {(0,) * offset + exp + (0,) * tail: c for exp, c in self.element.items()}
        return Poly(new_nvars, ring.from_dict(moved))

    # 텍스트
    def format(self) -> str:
        """grlex 내림차순의 결정적 표기 (예: 'x1^2 - 1/2*x1*x2 + 3')"""
        if self.is_zero():
            return "0"
        pieces: List[str] = []
        for exp, c in self.element.terms(grlex):
            value = to_fraction(c)
            negative = value < 0
            magnitude = -value if negative else value
            factors = []
            for j, e in enumerate(exp, start=1):
                if e == 1:
                    factors.append(f"{VARIABLE_PREFIX}{j}")
                elif e > 1:
                    factors.append(f"{VARIABLE_PREFIX}{j}^{e}")
            if not factors:
                body = _format_rational(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = _format_rational(magnitude) + "*" + "*".join(factors)
            if not pieces:
                pieces.append(("-" if negative else "") + body)
            else:
                pieces.append(("- " if negative else "+ ") + body)
        return " ".join(pieces)

    def __str__(self) -> str:
        return self.format()


def arith(p: Poly, q: Poly, kind: ArithmeticKind) -> Poly:
    """같은 환의 두 다항식에 대한 정확한 이항 연산"""
    if p.nvars != q.nvars:
        raise ValueError(f"변수 개수가 다른 다항식입니다: {p.nvars} != {q.nvars}")
    if kind is ArithmeticKind.ADD:
        return p + q
    if kind is ArithmeticKind.SUB:
        return p - q
    return p * q


def _check_reflection(i: int, nvars: int) -> None:
    if not 1 <= i <= nvars - 1:
        raise ValueError(f"단순 호환 번호가 범위를 벗어났습니다: s_{i} (n={nvars})")


def _format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


_NUMBER = re.compile(r"(\d+)(?:/(\d+))?")
_VARIABLE = re.compile(VARIABLE_PREFIX + r"(\d+)(?:\^(\d+))?")


def parse_poly(text: str, nvars: int, line: int = 1) -> Poly:
    """'x1^2 - 1/2*x1*x2 + 3' 형태의 텍스트를 읽습니다.

    Raises:
        WordParseError: 해석할 수 없는 문자, 범위를 벗어난 변수, 0 분모
    """
    ring = polynomial_ring(nvars)
    total = ring.zero
    pos = 0
    length = len(text)
    expect_term = True
    sign = 1

    def skip_spaces(at: int) -> int:
        while at < length and text[at].isspace():
            at += 1
        return at

    pos = skip_spaces(pos)
    if pos == length:
        raise WordParseError("빈 다항식입니다", line, 1, "EMPTY")
    while pos < length:
        if text[pos] in "+-":
            if text[pos] == "-":
                sign = -sign
            expect_term = True
            pos = skip_spaces(pos + 1)
            continue
        if not expect_term:
            raise WordParseError(f"'+' 또는 '-' 가 필요합니다: '{text[pos]}'", line, pos + 1, "UNEXPECTED_CHAR")
        term = ring.ground_new(QQ(sign))
        while True:
            number = _NUMBER.match(text, pos)
            variable = _VARIABLE.match(text, pos)
            if number:
                numerator, denominator = number.group(1), number.group(2)
                if denominator is not None and int(denominator) == 0:
                    raise WordParseError("분모가 0 입니다", line, pos + 1, "BAD_RATIONAL")
                term = term * QQ(int(numerator), int(denominator or 1))
                pos = number.end()
            elif variable:
                j = int(variable.group(1))
                if not 1 <= j <= nvars:
                    raise WordParseError(
                        f"변수 {VARIABLE_PREFIX}{j} 가 범위 밖입니다 (n={nvars})", line, pos + 1, "BAD_VARIABLE"
                    )
                power = int(variable.group(2) or 1)
                term = term * ring.gens[j - 1] ** power
                pos = variable.end()
            else:
                found = text[pos] if pos < length else "끝"
                raise WordParseError(f"해석할 수 없는 문자입니다: '{found}'", line, pos + 1, "UNEXPECTED_CHAR")
            pos = skip_spaces(pos)
            if pos < length and text[pos] == "*":
                pos = skip_spaces(pos + 1)
                continue
            break
        total = total + term
        sign = 1
        expect_term = False
    if expect_term:
        raise WordParseError("항이 빠졌습니다", line, length + 1, "UNEXPECTED_CHAR")
    return Poly(nvars, total)
