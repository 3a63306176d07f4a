"""
계산 명령 결과 DTO 정의

직렬화는 어댑터의 json_codec 이 맡고, 여기서는 도메인 값만 묶어 둡니다.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

from core.domain.bimodule import Bimodule
from core.domain.complex import Complex
from core.domain.equivalence import EquivalenceSearch
from core.domain.gaussian import GaussianResult
from core.domain.hecke import HeckeElement
from core.domain.homotopy import HomotopyClassSpace
from core.domain.morphism import BimoduleMap
from core.domain.words import BraidWord, BSWord


@dataclass(frozen=True, eq=False)
class RouquierResult:
    """F(word) 와 (요청 시) 가우스 소거 결과"""

    word: BraidWord
    complex: Complex
    euler: HeckeElement
    reduction: Optional[GaussianResult] = None


@dataclass(frozen=True, eq=False)
class HomResult:
    """Hom(B_source, B_target) 의 차수 degree 기저"""

    source: BSWord
    target: BSWord
    degree: int
    basis: Tuple[BimoduleMap, ...]
    source_module: Bimodule
    target_module: Bimodule

    @property
    def dimension(self) -> int:
        return len(self.basis)


@dataclass(frozen=True, eq=False)
class ClassesResult:
    """F(source) → F(target) 호모토피류 공간"""

    source: BraidWord
    target: BraidWord
    space: HomotopyClassSpace
    search: Optional[EquivalenceSearch] = None  # --search 일 때만
