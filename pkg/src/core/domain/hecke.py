"""
헤케 대수 H_n (ℤ[q, q^-1] 계수)

내부 기저는 표준 T-기저이고, 키는 순열의 정규 최소 단어입니다.
b_i := [B_i] 는 B_iB_i ≅ B_i⟨1⟩ ⊕ B_i⟨−1⟩ 에서 b_i² = (q + q^-1)·b_i 를 만족하므로

    T_i = b_i − q^-1,   T_i² = (q − q^-1)·T_i + 1,   T_i^-1 = b_i − q

이고, l(s_i w) > l(w) 이면 T_i T_w = T_{s_i w},
아니면 T_i T_w = (q − q^-1)·T_w + T_{s_i w} 입니다.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, Sequence, Tuple, Union

from .value_objects import LaurentPoly, Permutation
from .words import BraidWord

_Q_DIFFERENCE = LaurentPoly.from_dict({1: 1, -1: -1})
_Q_INVERSE = LaurentPoly.monomial(-1)
_Q = LaurentPoly.monomial(1)

Coefficient = Union[LaurentPoly, int]


@dataclass(frozen=True)
class HeckeElement:
    """T-기저 전개 Σ c_w·T_w (키: 순열 한 줄 표기, 계수 0 없음)"""

    strands: int
    terms: Tuple[Tuple[Tuple[int, ...], LaurentPoly], ...] = ()

    def __post_init__(self):
        for images, coefficient in self.terms:
            Permutation(images)
            if len(images) != self.strands:
                raise ValueError(f"순열 크기가 가닥 수와 다릅니다: {images} (n={self.strands})")
            if coefficient.is_zero():
                raise ValueError("계수 0 인 항은 저장할 수 없습니다")

    @classmethod
    def from_dict(cls, strands: int, terms: Dict[Tuple[int, ...], LaurentPoly]) -> "HeckeElement":
        ordered = sorted(
            ((images, c) for images, c in terms.items() if not c.is_zero()),
            key=lambda item: _sort_key(item[0]),
        )
        return cls(strands, tuple(ordered))

    @classmethod
    def zero(cls, strands: int) -> "HeckeElement":
        return cls(strands, ())

    @classmethod
    def one(cls, strands: int) -> "HeckeElement":
        return cls.T(Permutation.identity(strands))

    @classmethod
    def T(cls, w: Permutation, coefficient: Coefficient = 1) -> "HeckeElement":
        return cls.from_dict(w.size, {w.images: _as_laurent(coefficient)})

    @classmethod
    def generator(cls, i: int, strands: int) -> "HeckeElement":
        """T_i"""
        return cls.T(Permutation.transposition(i, strands))

    @classmethod
    def b(cls, i: int, strands: int) -> "HeckeElement":
        """b_i = T_i + q^-1"""
        return cls.generator(i, strands) + cls.one(strands).scale(_Q_INVERSE)

    def as_dict(self) -> Dict[Tuple[int, ...], LaurentPoly]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, w: Permutation) -> LaurentPoly:
        return self.as_dict().get(w.images, LaurentPoly.zero())

    def _check_same(self, other: "HeckeElement") -> None:
        if self.strands != other.strands:
            raise ValueError(f"가닥 수가 다른 헤케 원소입니다: {self.strands} != {other.strands}")

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        self._check_same(other)
        terms = self.as_dict()
        for images, c in other.terms:
            terms[images] = terms.get(images, LaurentPoly.zero()) + c
        return HeckeElement.from_dict(self.strands, terms)

    def __neg__(self) -> "HeckeElement":
        return HeckeElement(self.strands, tuple((images, -c) for images, c in self.terms))

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + (-other)

    def scale(self, factor: Coefficient) -> "HeckeElement":
        factor = _as_laurent(factor)
        return HeckeElement.from_dict(self.strands, {images: c * factor for images, c in self.terms})

    def shifted(self, amount: int) -> "HeckeElement":
        """q^amount 곱"""
        return self.scale(LaurentPoly.monomial(amount))

    def left_multiply_generator(self, i: int) -> "HeckeElement":
        """T_i · self"""
        s = Permutation.transposition(i, self.strands)
        terms: Dict[Tuple[int, ...], LaurentPoly] = {}
        for images, c in self.terms:
            w = Permutation(images)
            moved = (s * w).images
            terms[moved] = terms.get(moved, LaurentPoly.zero()) + c
            if w.left_descent(i):
                terms[images] = terms.get(images, LaurentPoly.zero()) + c * _Q_DIFFERENCE
        return HeckeElement.from_dict(self.strands, terms)

    def __mul__(self, other: Union["HeckeElement", LaurentPoly, int]) -> "HeckeElement":
        if not isinstance(other, HeckeElement):
            return self.scale(other)
        return mul(self, other)

    def __rmul__(self, other: Coefficient) -> "HeckeElement":
        return self.scale(other)

    def format(self) -> str:
        """'(q^-1 + q)·T[] + 1·T[1,2]' 형태 (길이, 최소 단어 순)"""
        if not self.terms:
            return "0"
        if self == HeckeElement.one(self.strands):
            return "1"
        pieces = []
        for images, c in self.terms:
            word = ",".join(str(i) for i in Permutation(images).reduced_word())
            coefficient = c.format()
            if len(c.coefficients) > 1:
                coefficient = f"({coefficient})"
            pieces.append(f"{coefficient}·T[{word}]")
        return " + ".join(pieces)

    def to_dict(self) -> Dict[str, str]:
        return {
            "T[" + ",".join(str(i) for i in Permutation(images).reduced_word()) + "]": c.format()
            for images, c in self.terms
        }

    def __str__(self) -> str:
        return self.format()


def _sort_key(images: Tuple[int, ...]) -> Tuple[int, Tuple[int, ...]]:
    w = Permutation(images)
    return (w.length(), w.reduced_word())


def _as_laurent(value: Coefficient) -> LaurentPoly:
    return value if isinstance(value, LaurentPoly) else LaurentPoly.monomial(0, value)


def mul(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    """a·b: a 의 각 항 T_w 를 최소 단어의 T_i 로 풀어 오른쪽 글자부터 b 에 곱합니다."""
    a._check_same(b)
    result = HeckeElement.zero(a.strands)
    for images, c in a.terms:
        partial = b
        for i in reversed(Permutation(images).reduced_word()):
            partial = partial.left_multiply_generator(i)
        result = result + partial.scale(c)
    return result


def product(elements: Iterable[HeckeElement], strands: int) -> HeckeElement:
    result = HeckeElement.one(strands)
    for element in elements:
        result = mul(result, element)
    return result


def bs_class(strands: int, letters: Sequence[int], shift: int = 0) -> HeckeElement:
    """q^shift·b_{i_1}⋯b_{i_k}"""
    return product((HeckeElement.b(i, strands) for i in letters), strands).shifted(shift)


def generator_image(i: int, strands: int, positive: bool = True) -> HeckeElement:
    """σ_i ↦ b_i − q^-1 = T_i, σ_i^-1 ↦ b_i − q = T_i^-1"""
    b = HeckeElement.b(i, strands)
    return b - HeckeElement.one(strands).scale(_Q_INVERSE if positive else _Q)


def braid_image(word: BraidWord) -> HeckeElement:
    return product(
        (generator_image(letter.index, word.strands, letter.positive) for letter in word.letters),
        word.strands,
    )


def parabolic_include(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    """H_m ⊗ H_n → H_{m+n}: 두 번째 인자의 생성원을 m 만큼 밀어 곱합니다.

    T_u 와 밀린 T_v 는 서로 가환하고 길이가 더해지므로 T_u·T_v' = T_{u×v} 입니다.
    """
    terms: Dict[Tuple[int, ...], LaurentPoly] = {}
    for u, cu in a.terms:
        for v, cv in b.terms:
            images = Permutation(u).parabolic(Permutation(v)).images
            terms[images] = terms.get(images, LaurentPoly.zero()) + cu * cv
    return HeckeElement.from_dict(a.strands + b.strands, terms)
