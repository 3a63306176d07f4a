"""
도메인 값 객체 정의

계산 전반에서 쓰는 불변 값 객체들을 정의합니다.
모든 값 객체는 불변이며, 유효성 검사와 도메인 메서드를 포함합니다.
"""

import re
from dataclasses import dataclass
from typing import Dict, Iterable, Tuple, Union


_LAURENT_TERM = re.compile(r"^([+-]?\d*)\*?(q(\^(-?\d+))?)?$")


@dataclass(frozen=True)
class LaurentPoly:
    """정수 계수 로랑 다항식 ℤ[q, q^-1] 값 객체

    coefficients 는 (지수, 계수) 쌍을 지수 오름차순으로 보관하며
    계수 0 인 항은 저장하지 않습니다.
    """

    coefficients: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        exponents = [e for e, _ in self.coefficients]
        if exponents != sorted(set(exponents)):
            raise ValueError(f"지수는 중복 없이 오름차순이어야 합니다: {exponents}")
        if any(c == 0 for _, c in self.coefficients):
            raise ValueError("계수 0 인 항은 저장할 수 없습니다")

    @classmethod
    def from_dict(cls, terms: Dict[int, int]) -> "LaurentPoly":
        return cls(tuple(sorted((e, c) for e, c in terms.items() if c != 0)))

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls(((0, 1),))

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentPoly":
        """coefficient·q^exponent"""
        return cls.from_dict({exponent: coefficient})

    def as_dict(self) -> Dict[int, int]:
        return dict(self.coefficients)

    def __add__(self, other: Union["LaurentPoly", int]) -> "LaurentPoly":
        other = _as_laurent(other)
        terms = self.as_dict()
        for e, c in other.coefficients:
            terms[e] = terms.get(e, 0) + c
        return LaurentPoly.from_dict(terms)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(tuple((e, -c) for e, c in self.coefficients))

    def __sub__(self, other: Union["LaurentPoly", int]) -> "LaurentPoly":
        return self + (-_as_laurent(other))

    def __rsub__(self, other: Union["LaurentPoly", int]) -> "LaurentPoly":
        return _as_laurent(other) - self

    def __mul__(self, other: Union["LaurentPoly", int]) -> "LaurentPoly":
        other = _as_laurent(other)
        terms: Dict[int, int] = {}
        for e1, c1 in self.coefficients:
            for e2, c2 in other.coefficients:
                terms[e1 + e2] = terms.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly.from_dict(terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "LaurentPoly":
        if exponent < 0:
            raise ValueError(f"음수 거듭제곱은 지원하지 않습니다: {exponent}")
        result = LaurentPoly.one()
        for _ in range(exponent):
            result = result * self
        return result

    def shifted(self, exponent: int) -> "LaurentPoly":
        """q^exponent 를 곱합니다."""
        return LaurentPoly(tuple((e + exponent, c) for e, c in self.coefficients))

    def is_zero(self) -> bool:
        return not self.coefficients

    def evaluate_at_one(self) -> int:
        """q = 1 에서의 값 (등급을 잊은 계수)"""
        return sum(c for _, c in self.coefficients)

    def format(self) -> str:
        """'q^-1 + 2 + q' 형태의 텍스트"""
        if not self.coefficients:
            return "0"
        pieces = []
        for e, c in self.coefficients:
            if e == 0:
                body = str(abs(c))
            else:
                power = "q" if e == 1 else f"q^{e}"
                body = power if abs(c) == 1 else f"{abs(c)}*{power}"
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """format() 이 만든 텍스트를 다시 읽습니다."""
        compact = text.replace(" ", "")
        if compact in ("", "0"):
            return cls.zero()
        chunks = re.findall(r"[+-]?[^+-]+(?:\^-?\d+)?", compact.replace("^-", "^~"))
        terms: Dict[int, int] = {}
        for chunk in chunks:
            match = _LAURENT_TERM.match(chunk.replace("^~", "^-"))
            if match is None or (not match.group(1).lstrip("+-") and not match.group(2)):
                raise ValueError(f"로랑 다항식 항을 해석할 수 없습니다: {chunk}")
            coeff_text, power, _, exp_text = match.groups()
            if coeff_text in ("", "+"):
                coeff = 1
            elif coeff_text == "-":
                coeff = -1
            else:
                coeff = int(coeff_text)
            if power is None:
                exponent = 0
            else:
                exponent = int(exp_text) if exp_text is not None else 1
            terms[exponent] = terms.get(exponent, 0) + coeff
        return cls.from_dict(terms)

    def __str__(self) -> str:
        return self.format()


def _as_laurent(value: Union[LaurentPoly, int]) -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, int):
        return LaurentPoly.monomial(0, value)
    raise TypeError(f"로랑 다항식으로 변환할 수 없습니다: {value!r}")


@dataclass(frozen=True)
class Permutation:
    """{1..n} 의 순열 값 객체 (한 줄 표기, images[j-1] = w(j))"""

    images: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"순열이 아닙니다: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, i: int, n: int) -> "Permutation":
        """단순 호환 s_i = (i, i+1)"""
        if not 1 <= i <= n - 1:
            raise ValueError(f"단순 호환 번호가 범위를 벗어났습니다: s_{i} (n={n})")
        images = list(range(1, n + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return cls(tuple(images))

    @classmethod
    def from_word(cls, letters: Iterable[int], n: int) -> "Permutation":
        """s_{i_1} s_{i_2} ... 의 곱"""
        result = cls.identity(n)
        for i in letters:
            result = result * cls.transposition(i, n)
        return result

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, j: int) -> int:
        return self.images[j - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """합성 (self ∘ other)(j) = self(other(j))"""
        if self.size != other.size:
            raise ValueError(f"순열 크기가 다릅니다: {self.size} != {other.size}")
        return Permutation(tuple(self(other(j)) for j in range(1, self.size + 1)))

    def inverse(self) -> "Permutation":
        images = [0] * self.size
        for j, image in enumerate(self.images, start=1):
            images[image - 1] = j
        return Permutation(tuple(images))

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.size + 1))

    def length(self) -> int:
        """역순쌍 개수 (콕세터 길이)"""
        return sum(
            1
            for a in range(self.size)
            for b in range(a + 1, self.size)
            if self.images[a] > self.images[b]
        )

    def left_descent(self, i: int) -> bool:
        """l(s_i w) < l(w) 인지 (w^{-1}(i) > w^{-1}(i+1))"""
        inverse = self.inverse()
        return inverse(i) > inverse(i + 1)

    def reduced_word(self) -> Tuple[int, ...]:
        """정규 최소 단어: 매번 가장 작은 왼쪽 하강을 떼어냅니다."""
        word = []
        current = self
        while not current.is_identity():
            i = next(k for k in range(1, self.size) if current.left_descent(k))
            word.append(i)
            current = Permutation.transposition(i, self.size) * current
        return tuple(word)

    def parabolic(self, other: "Permutation") -> "Permutation":
        """S_m × S_n ↪ S_{m+n} 로 나란히 놓은 순열"""
        shifted = tuple(image + self.size for image in other.images)
        return Permutation(self.images + shifted)

    def embedded(self, offset: int, total: int) -> "Permutation":
        """앞에 offset 개, 전체 total 개 가닥이 되도록 항등 가닥을 붙입니다."""
        tail = total - offset - self.size
        if offset < 0 or tail < 0:
            raise ValueError(f"순열을 끼워 넣을 수 없습니다: offset={offset}, total={total}")
        return Permutation.identity(offset).parabolic(self).parabolic(Permutation.identity(tail))

    def format(self) -> str:
        return "[" + ",".join(str(i) for i in self.images) + "]"
