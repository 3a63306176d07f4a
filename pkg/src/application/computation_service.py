"""
계산 명령 응용 서비스

rouquier / hecke / hom / classes 명령의 유스케이스입니다.
텍스트 입력을 해석해 도메인 계산을 부르고 결과 DTO 를 돌려줍니다.
"""

import logging

from constants import DEFAULT_LATTICE_BOUND
from core.domain.bimodule import realize
from core.domain.equivalence import find_homotopy_equivalence
from core.domain.gaussian import gaussian_eliminate
from core.domain.hecke import HeckeElement, braid_image
from core.domain.homotopy import homotopy_class_space
from core.domain.morphism import hom_basis
from core.domain.rouquier import rouquier
from core.domain.words import parse_braid, parse_bs_word

from .dtos.computation_dto import ClassesResult, HomResult, RouquierResult

logger = logging.getLogger(__name__)


class ComputationService:
    """단발 계산 서비스"""

    def __init__(self, strands: int, lattice_bound: int = DEFAULT_LATTICE_BOUND):
        """
        Args:
            strands: 브레이드 단어를 읽을 가닥 수
            lattice_bound: classes 의 동치 증인 탐색 계수 상한
        """
        self._strands = strands
        self._lattice_bound = lattice_bound

    def rouquier(self, text: str, reduce: bool = False) -> RouquierResult:
        """F(word), reduce 이면 가우스 소거까지

        Raises:
            WordParseError: 단어를 읽을 수 없을 때
        """
        word = parse_braid(text, self._strands)
        complex_ = rouquier(word).validated()
        reduction = gaussian_eliminate(complex_) if reduce else None
        if reduction is not None:
            logger.info(
                "F(%s): 합성분 %d → %d (분해 %d, 소거 %d)",
                word.format() or "∅",
                complex_.summand_count(),
                reduction.reduced.summand_count(),
                reduction.splits,
                reduction.cancellations,
            )
        return RouquierResult(word, complex_, complex_.euler_characteristic(), reduction)

    def hecke(self, text: str) -> HeckeElement:
        return braid_image(parse_braid(text, self._strands))

    def hom(self, source_text: str, target_text: str, degree: int) -> HomResult:
        """Hom(B_source, B_target) 의 차수 degree 기저

        Raises:
            WordParseError: 단어를 읽을 수 없을 때
            ValueError: 두 단어의 가닥 수가 다를 때
        """
        source = parse_bs_word(source_text, 1)
        target = parse_bs_word(target_text, 2)
        if source.strands != target.strands:
            raise ValueError(f"가닥 수가 다른 단어입니다: {source.strands} != {target.strands}")
        source_module, target_module = realize(source), realize(target)
        basis = hom_basis(source_module, target_module, degree)
        logger.info("Hom(%s, %s)_%d: 차원 %d", source, target, degree, len(basis))
        return HomResult(source, target, degree, tuple(basis), source_module, target_module)

    def classes(self, source_text: str, target_text: str, search: bool = False) -> ClassesResult:
        """F(source) → F(target) 호모토피류 공간, search 이면 동치 증인 탐색까지"""
        source = parse_braid(source_text, self._strands)
        target = parse_braid(target_text, self._strands)
        source_complex, target_complex = rouquier(source), rouquier(target)
        space = homotopy_class_space(source_complex, target_complex)
        found = None
        if search:
            found = find_homotopy_equivalence(source_complex, target_complex, self._lattice_bound)
            logger.info("%s ≃ %s 탐색: %s (%s)", source.format(), target.format(), found.reason, found.method)
        return ClassesResult(source, target, space, found)
