"""
표준 생성 사상

글자 i 마다 Hom 공간을 풀어 얻은 1차원 기저를 정규화합니다.

    dot      B_i → R⟨−1⟩           1⊗1 ↦ 1
    unit_dot R⟨1⟩ → B_i            1 ↦ x_i⊗1 − 1⊗x_{i+1}
    merge    B_iB_i → B_i⟨1⟩        merge∘split = 0
    split    B_i⟨−1⟩ → B_iB_i       1⊗1 ↦ 1⊗1⊗1
    unit     R_{s_i}⟨1⟩ → B_i      (순열 쌍가군과의 준동형)
    counit   B_i → R_{s_i}⟨−1⟩
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Tuple

from .bimodule import Bimodule, permutation_bimodule, realize, regular_bimodule
from .errors import RealizationError
from .morphism import BimoduleMap, hom_basis
from .value_objects import Permutation
from .words import BSWord

logger = logging.getLogger(__name__)


def _normalized(source: Bimodule, target: Bimodule, position: Tuple[int, int], value: Fraction, name: str) -> BimoduleMap:
    """1차원 Hom 공간의 기저를 position 성분이 value 가 되도록 맞춥니다."""
    basis = hom_basis(source, target, 0)
    if len(basis) != 1:
        raise RealizationError(f"{name} 의 Hom 공간 차원이 1 이 아닙니다: {len(basis)}")
    f = basis[0]
    entry = f.matrix.get(*position)
    if not entry.is_constant() or entry.is_zero():
        raise RealizationError(f"{name} 의 정규화 성분 {position} 이 0 아닌 상수가 아닙니다: {entry}")
    return f.scale(Fraction(value) / entry.constant_value())


def letter(i: int, strands: int, amount: int = 0) -> Bimodule:
    return realize(BSWord(strands, (i,), amount))


def letter_pair(i: int, strands: int) -> Bimodule:
    return realize(BSWord(strands, (i, i)))


@lru_cache(maxsize=None)
def dot(i: int, strands: int) -> BimoduleMap:
    """곱셈 사상 m: B_i → R⟨−1⟩, 행렬 [1, α_i]"""
    return _normalized(letter(i, strands), regular_bimodule(strands, -1), (0, 0), Fraction(1), f"dot({i})")


@lru_cache(maxsize=None)
def unit_dot(i: int, strands: int) -> BimoduleMap:
    """Δ: R⟨1⟩ → B_i, 행렬 [[α_i/2], [1/2]]"""
    return _normalized(regular_bimodule(strands, 1), letter(i, strands), (1, 0), Fraction(1, 2), f"unit_dot({i})")


@lru_cache(maxsize=None)
def merge(i: int, strands: int) -> BimoduleMap:
    """B_iB_i → B_i⟨1⟩"""
    return _normalized(letter_pair(i, strands), letter(i, strands, 1), (0, 1), Fraction(2), f"merge({i})")


@lru_cache(maxsize=None)
def split(i: int, strands: int) -> BimoduleMap:
    """B_i⟨−1⟩ → B_iB_i"""
    return _normalized(letter(i, strands, -1), letter_pair(i, strands), (0, 0), Fraction(1), f"split({i})")


@lru_cache(maxsize=None)
def unit(i: int, strands: int) -> BimoduleMap:
    """R_{s_i}⟨1⟩ → B_i, 행렬 [[−α_i/2], [1/2]]"""
    twisted = permutation_bimodule(Permutation.transposition(i, strands), 1)
    return _normalized(twisted, letter(i, strands), (1, 0), Fraction(1, 2), f"unit({i})")


@lru_cache(maxsize=None)
def counit(i: int, strands: int) -> BimoduleMap:
    """B_i → R_{s_i}⟨−1⟩, 행렬 [1, −α_i]"""
    twisted = permutation_bimodule(Permutation.transposition(i, strands), -1)
    return _normalized(letter(i, strands), twisted, (0, 0), Fraction(1), f"counit({i})")


@dataclass(frozen=True)
class IdempotentSplit:
    """B_iB_i ≅ B_i⟨1⟩ ⊕ B_i⟨−1⟩ 의 포함/사영"""

    include_plus: BimoduleMap
    include_minus: BimoduleMap
    project_plus: BimoduleMap
    project_minus: BimoduleMap

    def check(self) -> bool:
        identity_plus = BimoduleMap.identity(self.include_plus.source)
        identity_minus = BimoduleMap.identity(self.include_minus.source)
        whole = BimoduleMap.identity(self.include_plus.target)
        return (
            all(f.is_valid() for f in (self.include_plus, self.include_minus, self.project_plus, self.project_minus))
            and self.project_plus.compose(self.include_plus) == identity_plus
            and self.project_minus.compose(self.include_minus) == identity_minus
            and self.project_plus.compose(self.include_minus).is_zero()
            and self.project_minus.compose(self.include_plus).is_zero()
            and self.include_plus.compose(self.project_plus) + self.include_minus.compose(self.project_minus) == whole
        )


@lru_cache(maxsize=None)
def idempotent_split_BiBi(i: int, strands: int) -> IdempotentSplit:
    """가운데 R 인자의 분해를 B_iB_i 에 적용한 정규 분해

    기저 번호 2a + b (a: 첫 글자 비트) 에서 ι_− 는 열 e0, e2, ι_+ 는 열 e1, e3 입니다.

    Raises:
        RealizationError: 항등식 검증 실패
    """
    pair = letter_pair(i, strands)
    plus = letter(i, strands, 1)
    minus = letter(i, strands, -1)
    include_minus = BimoduleMap.from_rows(minus, pair, [[1, 0], [0, 0], [0, 1], [0, 0]])
    include_plus = BimoduleMap.from_rows(plus, pair, [[0, 0], [1, 0], [0, 0], [0, 1]])
    project_minus = BimoduleMap.from_rows(pair, minus, [[1, 0, 0, 0], [0, 0, 1, 0]])
    project_plus = BimoduleMap.from_rows(pair, plus, [[0, 1, 0, 0], [0, 0, 0, 1]])
    result = IdempotentSplit(include_plus, include_minus, project_plus, project_minus)
    if not result.check():
        raise RealizationError(f"B_{i}B_{i} 의 멱등 분해 검증에 실패했습니다")
    return result


def standard_generators(strands: int) -> Dict[str, BimoduleMap]:
    """'dot[i]', 'unit_dot[i]', 'merge[i]', 'split[i]', 'unit[i]', 'counit[i]' 이름의 사상들"""
    generators: Dict[str, BimoduleMap] = {}
    for i in range(1, strands):
        generators[f"dot[{i}]"] = dot(i, strands)
        generators[f"unit_dot[{i}]"] = unit_dot(i, strands)
        generators[f"merge[{i}]"] = merge(i, strands)
        generators[f"split[{i}]"] = split(i, strands)
        generators[f"unit[{i}]"] = unit(i, strands)
        generators[f"counit[{i}]"] = counit(i, strands)
    logger.info("표준 생성 사상 %d 개를 만들었습니다 (n=%d)", len(generators), strands)
    return generators

