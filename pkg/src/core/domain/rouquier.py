"""
루키에 복합체와 케이블 교차

    F(σ_i)    = B_i → R⟨−1⟩        (B_i 가 0 차, 미분은 dot)
    F(σ_i^-1) = R⟨1⟩ → B_i         (B_i 가 0 차, 미분은 unit_dot)

단어의 복합체는 글자 복합체들의 ⋆ 곱입니다. 합성분 index 는 글자마다 한 비트라서
F(w·w') 와 F(w) ⋆ F(w') 는 글자 그대로 같습니다.

케이블 교차 (N = m + n 가닥):
    X_{m,n}  = F(블록 i=1..m, 각 블록 σ_{i+n-1} … σ_i)⟨−mn⟩
    X'_{m,n} = F(블록 i=n..1, 각 블록 σ_i^-1 … σ_{i+m-1}^-1)⟨mn⟩   (X_{n,m} 단어의 역)
"""

import logging
from functools import lru_cache
from typing import List, Tuple

from common.enums import CrossingSign

from .complex import BlockMatrix, ChainMap, Complex, Summand, star, tensor_graded_maps, tensor_k_complexes
from .generators import counit, dot, unit, unit_dot
from .value_objects import Permutation
from .words import BraidLetter, BraidWord

logger = logging.getLogger(__name__)

# 콕세터 분해의 두 모양
FIRST_FORM = "first"  # X_{1,n} 을 offset 0..m-1 에 차례로
SECOND_FORM = "second"  # X_{m,1} 을 offset n-1..0 에 차례로


@lru_cache(maxsize=None)
def generator_complex(i: int, strands: int, sign: CrossingSign = CrossingSign.POSITIVE) -> Complex:
    """F(σ_i^{±1})"""
    if sign is CrossingSign.POSITIVE:
        top = Summand(strands, (i,), 0, None, (0,))
        bottom = Summand(strands, (), -1, None, (1,))
        d = dot(i, strands).reframed(top.module(), bottom.module())
        return Complex(strands, {0: (top,), 1: (bottom,)}, {0: BlockMatrix((bottom,), (top,), {(0, 0): d})})
    top = Summand(strands, (), 1, None, (0,))
    bottom = Summand(strands, (i,), 0, None, (1,))
    d = unit_dot(i, strands).reframed(top.module(), bottom.module())
    return Complex(strands, {-1: (top,), 0: (bottom,)}, {-1: BlockMatrix((bottom,), (top,), {(0, 0): d})})


@lru_cache(maxsize=None)
def rouquier(word: BraidWord) -> Complex:
    """F(word), 빈 단어는 R"""
    complex_ = star((generator_complex(letter.index, word.strands, letter.sign) for letter in word.letters), word.strands)
    logger.debug("F(%s): 합성분 %d", word.format() or "∅", complex_.summand_count())
    return complex_


def _check_cable(m: int, n: int) -> None:
    if m < 0 or n < 0:
        raise ValueError(f"케이블 교차의 가닥 수는 0 이상이어야 합니다: ({m}, {n})")


def cabled_word(m: int, n: int, sign: CrossingSign = CrossingSign.POSITIVE) -> BraidWord:
    """케이블 교차의 브레이드 단어 (m + n 가닥)"""
    _check_cable(m, n)
    if sign is CrossingSign.POSITIVE:
        indices = [j for i in range(1, m + 1) for j in range(i + n - 1, i - 1, -1)] if n else []
        return BraidWord.positive(m + n, indices)
    indices = [j for i in range(n, 0, -1) for j in range(i, i + m)] if m else []
    return BraidWord.negative(m + n, indices)


def cable_shift(m: int, n: int, sign: CrossingSign) -> int:
    return -m * n if sign is CrossingSign.POSITIVE else m * n


def cabled_crossing(m: int, n: int, sign: CrossingSign = CrossingSign.POSITIVE) -> Complex:
    """X_{m,n} (양) 또는 X'_{m,n} (음). m 또는 n 이 0 이면 R."""
    _check_cable(m, n)
    if m == 0 or n == 0:
        return Complex.unit(m + n)
    return rouquier(cabled_word(m, n, sign)).shifted(cable_shift(m, n, sign))


def embedded_complex(complex_: Complex, before: int, after: int) -> Complex:
    """1_before ⊠ C ⊠ 1_after"""
    result = complex_
    if before:
        result = tensor_k_complexes(Complex.unit(before), result)
    if after:
        result = tensor_k_complexes(result, Complex.unit(after))
    return result


def coxeter_blocks(m: int, n: int, sign: CrossingSign, form: str) -> List[Tuple[int, BraidWord]]:
    """(offset, 콕세터 브레이드 단어) 를 ⋆ 곱 순서대로

    first: (X_{1,n} ⊠ 1_{m-1}) ⋆ … ⋆ (1_{m-1} ⊠ X_{1,n})
    second: (1_{n-1} ⊠ X_{m,1}) ⋆ … ⋆ (X_{m,1} ⊠ 1_{n-1})
    """
    if form == FIRST_FORM:
        return [(o, cabled_word(1, n, sign)) for o in range(m)]
    if form == SECOND_FORM:
        return [(o, cabled_word(m, 1, sign)) for o in range(n - 1, -1, -1)]
    raise ValueError(f"알 수 없는 분해 모양입니다: {form}")


def literal_form(sign: CrossingSign) -> str:
    """단어가 글자 그대로 같아지는 분해 (다른 하나는 먼 글자 교환만큼 다름)"""
    return FIRST_FORM if sign is CrossingSign.POSITIVE else SECOND_FORM


def coxeter_form(m: int, n: int, sign: CrossingSign, form: str) -> Complex:
    """콕세터 브레이드 복합체를 ⊠ 로 끼우고 ⋆ 로 곱한 복합체"""
    _check_cable(m, n)
    total = m + n
    if m == 0 or n == 0:
        return Complex.unit(total)
    block_m, block_n = (1, n) if form == FIRST_FORM else (m, 1)
    factors = []
    for offset, word in coxeter_blocks(m, n, sign, form):
        piece = rouquier(word).shifted(cable_shift(block_m, block_n, sign))
        factors.append(embedded_complex(piece, offset, total - offset - word.strands))
    return star(factors, total)


def _letter_chain_map(letter: BraidLetter, strands: int) -> ChainMap:
    """R_{s_i}⟨1⟩ → F(σ_i) 또는 F(σ_i^-1) → R_{s_i}⟨−1⟩"""
    i = letter.index
    generator = generator_complex(i, strands, letter.sign)
    transposition = Permutation.transposition(i, strands)
    if letter.positive:
        twisted = Complex.single(Summand(strands, (), 1, transposition))
        source, target = twisted, generator
        piece = unit(i, strands).reframed(twisted.at(0)[0].module(), generator.at(0)[0].module())
        block = BlockMatrix(generator.at(0), twisted.at(0), {(0, 0): piece})
    else:
        twisted = Complex.single(Summand(strands, (), -1, transposition))
        source, target = generator, twisted
        piece = counit(i, strands).reframed(generator.at(0)[0].module(), twisted.at(0)[0].module())
        block = BlockMatrix(twisted.at(0), generator.at(0), {(0, 0): piece})
    return ChainMap(source, target, {0: block})


def hloc_map(m: int, n: int, sign: CrossingSign = CrossingSign.POSITIVE) -> ChainMap:
    """순열 쌍가군과 케이블 교차 사이의 표준 사슬 사상

    양: R_w → X_{m,n},  음: X'_{m,n} → R_w  (글자별 사상의 ⋆ 곱 뒤 ⟨∓mn⟩ 이동)
    """
    _check_cable(m, n)
    total = m + n
    if m == 0 or n == 0:
        return ChainMap.identity(Complex.unit(total))
    word = cabled_word(m, n, sign)
    result = None
    for letter in word.letters:
        piece = _letter_chain_map(letter, total)
        result = piece if result is None else tensor_graded_maps(result, piece, external=False)
    return result.shifted(cable_shift(m, n, sign))
