"""
슬라이드 사상

β: X ⋆ (Y1 ⊠ Y2) → (Y2 ⊠ Y1) ⋆ X 의 호모토피 동치를 만듭니다 (X 는 케이블 교차).

원자 슬라이드 (3 가닥, 이동 없는 복합체 기준):
    (1,2): F(σ2 σ1) ⋆ B2 → B1 ⋆ F(σ2 σ1)
    (2,1): F(σ1 σ2) ⋆ B1 → B2 ⋆ F(σ1 σ2)
음의 교차는 같은 글자의 역원으로 바꿉니다. 원자 슬라이드는 호모토피류 공간의
격자 탐색으로 풀고, 일반 슬라이드는 다음 사슬로 조립합니다.

    Y 를 생성원 B 하나씩 밀기
    → 케이블 교차를 콕세터 블록들의 곱으로 (글자 그대로 또는 재배열 동형)
    → 블록마다 먼 글자 교환, 끼워 넣은 원자 슬라이드, 먼 글자 교환
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Sequence, Tuple, Union

from common.enums import CrossingSign
from constants import DEFAULT_LATTICE_BOUND

from .complex import Complex, Summand, star
from .equivalence import EquivalenceSearch, HomotopyEquivalence, find_homotopy_equivalence, find_relabeling_isomorphism
from .errors import RealizationError
from .rouquier import FIRST_FORM, SECOND_FORM, cable_shift, cabled_crossing, cabled_word, coxeter_blocks, rouquier
from .words import BraidLetter, BraidWord, BSWord

logger = logging.getLogger(__name__)

ATOMIC_STRANDS = 3


@dataclass(frozen=True)
class AtomicConfig:
    """원자 슬라이드 경우: (m, n) ∈ {(1,2), (2,1)} 와 교차 부호"""

    m: int
    n: int
    sign: CrossingSign = CrossingSign.POSITIVE

    def __post_init__(self):
        if (self.m, self.n) not in ((1, 2), (2, 1)):
            raise ValueError(f"원자 슬라이드는 (1,2) 또는 (2,1) 뿐입니다: ({self.m},{self.n})")

    @property
    def pair(self) -> Tuple[int, int]:
        """X_{m,n} 의 두 글자"""
        return (2, 1) if (self.m, self.n) == (1, 2) else (1, 2)

    @property
    def generator(self) -> int:
        """미는 생성원 (오른쪽)"""
        return 2 if (self.m, self.n) == (1, 2) else 1

    @property
    def slid(self) -> int:
        return 1 if (self.m, self.n) == (1, 2) else 2

    def word(self) -> BraidWord:
        return BraidWord(ATOMIC_STRANDS, tuple(BraidLetter(i, self.sign) for i in self.pair))

    def label(self) -> str:
        return f"({self.m},{self.n}){self.sign.symbol}"


@dataclass(frozen=True, eq=False)
class SlideResult:
    """검증된 슬라이드와 조립 정보"""

    equivalence: HomotopyEquivalence
    source_word: BSWord
    target_word: BSWord
    atomic_steps: int = 0
    relabel_steps: int = 0


def _generator_complex(strands: int, i: int) -> Complex:
    return Complex.single(Summand(strands, (i,)))


def word_complex(word: BSWord) -> Complex:
    """B_word⟨shift⟩ 를 글자마다 ⋆ 로 곱한 0 차 복합체"""
    return star((_generator_complex(word.strands, i) for i in word.letters), word.strands).shifted(word.shift)


@lru_cache(maxsize=None)
def _atomic_search(config: AtomicConfig, lattice_bound: int) -> EquivalenceSearch:
    """이동 없는 3 가닥 원자 슬라이드 탐색"""
    crossing = rouquier(config.word())
    source = star([crossing, _generator_complex(ATOMIC_STRANDS, config.generator)], ATOMIC_STRANDS)
    target = star([_generator_complex(ATOMIC_STRANDS, config.slid), crossing], ATOMIC_STRANDS)
    return find_homotopy_equivalence(source, target, lattice_bound)


def _atomic_equivalence(config: AtomicConfig, lattice_bound: int) -> HomotopyEquivalence:
    search = _atomic_search(config, lattice_bound)
    if search.equivalence is None:
        raise RealizationError(f"원자 슬라이드 {config.label()} 의 가역 호모토피류가 없습니다: {search.reason}")
    return search.equivalence


def atomic_slide(config: AtomicConfig, lattice_bound: int = DEFAULT_LATTICE_BOUND) -> HomotopyEquivalence:
    """X ⋆ B → B' ⋆ X (X = X_{m,n} 또는 X'_{m,n}, 이동 포함)

    Raises:
        RealizationError: 격자 안에 가역인 호모토피류가 없으면
    """
    shift = cable_shift(config.m, config.n, config.sign)
    equivalence = _atomic_equivalence(config, lattice_bound).shifted(shift)
    logger.info("원자 슬라이드 %s: 증인 크기 %s", config.label(), equivalence.witness_sizes())
    return equivalence


def atomic_search_report(config: AtomicConfig, lattice_bound: int = DEFAULT_LATTICE_BOUND) -> EquivalenceSearch:
    return _atomic_search(config, lattice_bound)


# 조립 상태: 브레이드 조각은 글자 번호 튜플, 생성원은 정수
Factor = Union[Tuple[int, ...], int]


class _Assembler:
    """인자 목록 상태를 바꿔 가며 동치를 이어 붙입니다."""

    def __init__(self, strands: int, sign: CrossingSign, lattice_bound: int):
        self.strands = strands
        self.sign = sign
        self.lattice_bound = lattice_bound
        self.total: Union[HomotopyEquivalence, None] = None
        self.atomic_steps = 0
        self.relabel_steps = 0

    def complex_of(self, factors: Sequence[Factor]) -> Complex:
        pieces = []
        for factor in factors:
            if isinstance(factor, int):
                pieces.append(_generator_complex(self.strands, factor))
            elif factor:
                pieces.append(rouquier(BraidWord(self.strands, tuple(BraidLetter(i, self.sign) for i in factor))))
        return star(pieces, self.strands)

    def _append(self, step: HomotopyEquivalence) -> None:
        self.total = step if self.total is None else self.total.then(step)

    def relabel(self, before: Sequence[Factor], after: Sequence[Factor]) -> None:
        source, target = self.complex_of(before), self.complex_of(after)
        if source.same_as(target):
            return
        step = find_relabeling_isomorphism(source, target)
        if step is None:
            raise RealizationError("먼 글자 교환 동형을 찾지 못했습니다")
        self.relabel_steps += 1
        self._append(step)

    def atomic(self, prefix: Sequence[Factor], config: AtomicConfig, offset: int, suffix: Sequence[Factor]) -> None:
        step = _atomic_equivalence(config, self.lattice_bound).embedded(offset, self.strands - offset - ATOMIC_STRANDS)
        prefix = [f for f in prefix if f != ()]
        suffix = [f for f in suffix if f != ()]
        if suffix:
            step = step.star_right(self.complex_of(suffix))
        if prefix:
            step = step.star_left(self.complex_of(prefix))
        self.atomic_steps += 1
        self._append(step)


def _pass_block(
    assembler: _Assembler,
    outer: List[Factor],
    block: Tuple[int, ...],
    inner: List[Factor],
    current: int,
    config: AtomicConfig,
) -> int:
    """outer·block·B_current·inner → outer·B_slid·block·inner, 새 생성원 번호를 돌려줍니다."""
    first, second = (current, current - 1) if config.generator == 2 else (current, current + 1)
    position = next(p for p in range(len(block) - 1) if block[p : p + 2] == (first, second))
    left, pair, right = block[:position], block[position : position + 2], block[position + 2 :]
    slid = current - 1 if config.generator == 2 else current + 1
    offset = min(pair) - 1

    assembler.relabel(outer + [left, pair, right, current] + inner, outer + [left, pair, current, right] + inner)
    assembler.atomic(outer + [left], config, offset, [right] + inner)
    assembler.relabel(outer + [left, slid, pair, right] + inner, outer + [slid, left, pair, right] + inner)
    return slid


def _slide_generator(
    assembler: _Assembler, m: int, n: int, done: List[Factor], generator: int, rest: List[Factor]
) -> int:
    """done·X·B_generator·rest → done·B_swapped·X·rest"""
    word = tuple(letter.index for letter in cabled_word(m, n, assembler.sign).letters)
    from_first_factor = generator < m
    form = SECOND_FORM if from_first_factor else FIRST_FORM
    blocks = [tuple(letter.index + offset for letter in w.letters) for offset, w in coxeter_blocks(m, n, assembler.sign, form)]
    config = AtomicConfig(2, 1, assembler.sign) if from_first_factor else AtomicConfig(1, 2, assembler.sign)

    assembler.relabel(done + [word, generator] + rest, done + blocks + [generator] + rest)
    current = generator
    for position in range(len(blocks) - 1, -1, -1):
        outer = done + blocks[:position]
        inner = blocks[position + 1 :] + rest
        current = _pass_block(assembler, outer, blocks[position], inner, current, config)
    assembler.relabel(done + [current] + blocks + rest, done + [current, word] + rest)
    return current


def swapped_word(first: BSWord, second: BSWord) -> BSWord:
    """swap_{m,n}(Y1 ⊠ Y2) = Y2 ⊠ Y1"""
    return second.external(first)


def slide(
    first: BSWord,
    second: BSWord,
    sign: CrossingSign = CrossingSign.POSITIVE,
    lattice_bound: int = DEFAULT_LATTICE_BOUND,
    verify: bool = True,
) -> SlideResult:
    """X ⋆ (Y1 ⊠ Y2) → (Y2 ⊠ Y1) ⋆ X 를 원자 슬라이드와 먼 글자 교환으로 조립합니다.

    Raises:
        RealizationError: 원자 슬라이드나 교환 동형이 없으면
        ArithmeticError: 조립한 증인이 검증을 통과하지 못하면
    """
    m, n = first.strands, second.strands
    strands = m + n
    source_word = first.external(second)
    target_word = swapped_word(first, second)
    assembler = _Assembler(strands, sign, lattice_bound)
    generators = list(source_word.letters)

    if m and n:
        done: List[Factor] = []
        for t, generator in enumerate(generators):
            slid = _slide_generator(assembler, m, n, done, generator, generators[t + 1 :])
            done.append(slid)
        # 밀린 글자 순서 (Y1 쪽 먼저) 를 Y2 ⊠ Y1 순서로
        crossing_word = tuple(letter.index for letter in cabled_word(m, n, sign).letters)
        assembler.relabel(done + [crossing_word], list(target_word.letters) + [crossing_word])

    if assembler.total is None:
        source = star([cabled_crossing(m, n, sign), word_complex(source_word)], strands)
        equivalence = HomotopyEquivalence.identity(source)
    else:
        equivalence = assembler.total.shifted(cable_shift(m, n, sign) + source_word.shift)
    if verify and not equivalence.verify():
        raise ArithmeticError(f"슬라이드 {source_word} → {target_word} 의 증인이 검증을 통과하지 못했습니다")
    logger.info(
        "슬라이드 %s → %s: 원자 %d, 재배열 %d", source_word, target_word, assembler.atomic_steps, assembler.relabel_steps
    )
    return SlideResult(equivalence, source_word, target_word, assembler.atomic_steps, assembler.relabel_steps)

