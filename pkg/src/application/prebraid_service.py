"""
프리브레이딩 검사 응용 서비스

케이블 교차 X_{m,n} 을 브레이딩 후보로 두고 육각형 공리, 슬라이드 자연성,
순열 쌍가군과의 호환성, 콕세터 분해, 정준 동치의 추이성을 검사합니다.
찾은 증인은 보고 전에 한 번 더 독립적으로 검증합니다.
"""

import logging
from typing import Dict, Sequence, Tuple

from common.enums import CrossingSign, Verdict
from constants import (
    DEFAULT_DEGREE_WINDOW,
    DEFAULT_LATTICE_BOUND,
    REASON_MISMATCH,
    REASON_NONZERO_HOMOLOGY,
    REASON_NOT_CHAIN_MAP,
    REASON_NOT_FOUND_WITHIN_LATTICE,
    REASON_OK,
    REASON_WITNESS_REJECTED,
    REASON_ZERO_SCALAR,
    TRANSITIVE_STRANDS,
)
from core.domain.complex import Complex, cone, is_chain_map, star
from core.domain.equivalence import EquivalenceSearch, find_homotopy_equivalence, find_relabeling_isomorphism
from core.domain.errors import RealizationError
from core.domain.hecke import braid_image
from core.domain.homology import degreewise_homology_dims
from core.domain.homotopy import homotopic_multiple
from core.domain.rouquier import (
    FIRST_FORM,
    SECOND_FORM,
    cabled_crossing,
    coxeter_form,
    embedded_complex,
    hloc_map,
    literal_form,
    rouquier,
)
from core.domain.slides import slide, swapped_word, word_complex
from core.domain.words import BSWord, parse_braid

from .dtos.report_dto import CheckReport

logger = logging.getLogger(__name__)

# 육각형 두 개
FIRST_HEXAGON = "first"  # β_{a, b⊠c} ≃ (1_b ⊠ β_{a,c}) ⋆ (β_{a,b} ⊠ 1_c)
SECOND_HEXAGON = "second"  # β_{a⊠b, c} ≃ (β_{a,c} ⊠ 1_b) ⋆ (1_a ⊠ β_{b,c})


class PrebraidService:
    """프리브레이딩 검사 서비스"""

    def __init__(
        self,
        lattice_bound: int = DEFAULT_LATTICE_BOUND,
        window: Tuple[int, int] = DEFAULT_DEGREE_WINDOW,
        progress: bool = False,
    ):
        """
        Args:
            lattice_bound: 호모토피류 격자 탐색 범위
            window: 호몰로지 검사 내부 차수 창
            progress: 호몰로지 진행 막대 표시 여부
        """
        self._lattice_bound = lattice_bound
        self._window = window
        self._progress = progress

    # 공통
    def equivalence_report(self, name: str, search: EquivalenceSearch, details: Dict[str, object]) -> CheckReport:
        """탐색 결과를 판정으로. 찾은 증인은 다시 검증합니다."""
        details = dict(details)
        details.update({"method": search.method, "candidates_tried": search.candidates_tried})
        if search.class_dimension is not None:
            details["class_dimension"] = search.class_dimension
        if search.equivalence is None:
            details["lattice_bound"] = self._lattice_bound
            verdict = Verdict.FAIL if search.reason == REASON_WITNESS_REJECTED else Verdict.INCONCLUSIVE
            return CheckReport(name, verdict, search.reason, details)
        if not search.equivalence.verify():
            return CheckReport(name, Verdict.FAIL, REASON_WITNESS_REJECTED, details)
        details["lattice"] = list(search.lattice)
        details["witness_sizes"] = search.equivalence.witness_sizes()
        return CheckReport(name, Verdict.PASS, REASON_OK, details)

    # 육각형
    def hexagon_sides(self, a: int, b: int, c: int, hexagon: str, sign: CrossingSign) -> Tuple[Complex, Complex]:
        """육각형 한 개의 (한 번에 교차, 두 단계 교차) 복합체"""
        total = a + b + c
        if hexagon == FIRST_HEXAGON:
            direct = cabled_crossing(a, b + c, sign)
            steps = [
                embedded_complex(cabled_crossing(a, c, sign), b, 0),
                embedded_complex(cabled_crossing(a, b, sign), 0, c),
            ]
        elif hexagon == SECOND_HEXAGON:
            direct = cabled_crossing(a + b, c, sign)
            steps = [
                embedded_complex(cabled_crossing(a, c, sign), 0, b),
                embedded_complex(cabled_crossing(b, c, sign), a, 0),
            ]
        else:
            raise ValueError(f"알 수 없는 육각형입니다: {hexagon}")
        return direct, star(steps, total)

    def hexagon_check(
        self, a: int, b: int, c: int, hexagon: str = FIRST_HEXAGON, sign: CrossingSign = CrossingSign.POSITIVE
    ) -> CheckReport:
        """가닥 수 (a, b, c) 에서 육각형 공리 하나"""
        if min(a, b, c) < 0:
            raise ValueError(f"가닥 수는 0 이상이어야 합니다: ({a}, {b}, {c})")
        name = f"hexagon-{hexagon}({a},{b},{c}){sign.symbol}"
        logger.info("육각형 검사 시작: %s", name)
        direct, steps = self.hexagon_sides(a, b, c, hexagon, sign)
        details: Dict[str, object] = {
            "strands": [a, b, c],
            "hexagon": hexagon,
            "sign": sign.symbol,
            "summands": [direct.summand_count(), steps.summand_count()],
        }
        if direct.same_as(steps):
            details["method"] = "identity"
            return CheckReport(name, Verdict.PASS, REASON_OK, details)
        return self.equivalence_report(name, find_homotopy_equivalence(direct, steps, self._lattice_bound), details)

    # 자연성
    def naturality_check(self, first: BSWord, second: BSWord, sign: CrossingSign = CrossingSign.POSITIVE) -> CheckReport:
        """X ⋆ (Y1 ⊠ Y2) ≃ (Y2 ⊠ Y1) ⋆ X 슬라이드와 그 양끝"""
        m, n = first.strands, second.strands
        name = f"naturality({first},{second}){sign.symbol}"
        logger.info("자연성 검사 시작: %s", name)
        details: Dict[str, object] = {"source": first.external(second).format(), "target": swapped_word(first, second).format()}
        try:
            result = slide(first, second, sign, self._lattice_bound)
        except RealizationError as e:
            logger.warning("슬라이드 조립 실패: %s", e)
            details["error"] = str(e)
            return CheckReport(name, Verdict.INCONCLUSIVE, REASON_NOT_FOUND_WITHIN_LATTICE, details)
        except ArithmeticError as e:
            details["error"] = str(e)
            return CheckReport(name, Verdict.FAIL, REASON_WITNESS_REJECTED, details)

        crossing = cabled_crossing(m, n, sign)
        expected_source = star([crossing, word_complex(result.source_word)], m + n)
        expected_target = star([word_complex(result.target_word), crossing], m + n)
        details.update(
            {
                "atomic_steps": result.atomic_steps,
                "relabel_steps": result.relabel_steps,
                "witness_sizes": result.equivalence.witness_sizes(),
            }
        )
        if not (result.equivalence.source.same_as(expected_source) and result.equivalence.target.same_as(expected_target)):
            return CheckReport(name, Verdict.FAIL, REASON_MISMATCH, details)
        if not result.equivalence.verify():
            return CheckReport(name, Verdict.FAIL, REASON_WITNESS_REJECTED, details)
        return CheckReport(name, Verdict.PASS, REASON_OK, details)

    # 순열 쌍가군 호환성
    def hloc_compatibility(self, m: int, n: int, sign: CrossingSign = CrossingSign.POSITIVE) -> CheckReport:
        """R_w → X_{m,n} (음이면 X'_{m,n} → R_w) 의 원뿔이 창 안에서 완전열인지"""
        name = f"hloc({m},{n}){sign.symbol}"
        logger.info("순열 쌍가군 호환성 검사 시작: %s", name)
        f = hloc_map(m, n, sign)
        details: Dict[str, object] = {"window": list(self._window), "sign": sign.symbol}
        if not is_chain_map(f):
            return CheckReport(name, Verdict.FAIL, REASON_NOT_CHAIN_MAP, details)
        table = degreewise_homology_dims(cone(f), self._window, self._progress)
        details["nonzero"] = [list(entry) for entry in table.nonzero()]
        if not table.is_exact():
            return CheckReport(name, Verdict.FAIL, REASON_NONZERO_HOMOLOGY, details)
        return CheckReport(name, Verdict.PASS, REASON_OK, details)

    # 콕세터 분해
    def coxeter_factorization_check(self, m: int, n: int, sign: CrossingSign = CrossingSign.POSITIVE) -> CheckReport:
        """글자 그대로의 분해는 ≅ (같은 복합체), 다른 분해는 재배열 동형 또는 호모토피 동치"""
        name = f"coxeter({m},{n}){sign.symbol}"
        logger.info("콕세터 분해 검사 시작: %s", name)
        crossing = cabled_crossing(m, n, sign)
        literal = literal_form(sign)
        other = SECOND_FORM if literal == FIRST_FORM else FIRST_FORM
        details: Dict[str, object] = {"literal_form": literal, "summands": crossing.summand_count()}

        if not coxeter_form(m, n, sign, literal).same_as(crossing):
            return CheckReport(name, Verdict.FAIL, REASON_MISMATCH, details)
        factored = coxeter_form(m, n, sign, other)
        if factored.same_as(crossing):
            details["method"] = "identity"
            return CheckReport(name, Verdict.PASS, REASON_OK, details)
        relabel = find_relabeling_isomorphism(crossing, factored)
        if relabel is not None and relabel.verify():
            details["method"] = "relabel"
            details["witness_sizes"] = relabel.witness_sizes()
            return CheckReport(name, Verdict.PASS, REASON_OK, details)
        return self.equivalence_report(name, find_homotopy_equivalence(crossing, factored, self._lattice_bound), details)

    # 정준 동치의 추이성
    def transitive_check(self, words: Sequence[str], strands: int = TRANSITIVE_STRANDS) -> CheckReport:
        """같은 브레이드의 단어 w1, w2, w3 에서 ψ23∘ψ12 − c·ψ13 이 영호모토픽인 c ≠ 0"""
        if len(words) != 3:
            raise ValueError(f"단어 세 개가 필요합니다: {len(words)}")
        braids = [parse_braid(text, strands) for text in words]
        name = "transitive(" + " | ".join(w.format() or "∅" for w in braids) + ")"
        logger.info("추이성 검사 시작: %s", name)
        details: Dict[str, object] = {"words": list(words)}
        first_image = braid_image(braids[0])
        if any(w.permutation() != braids[0].permutation() or braid_image(w) != first_image for w in braids[1:]):
            return CheckReport(name, Verdict.FAIL, REASON_MISMATCH, details)

        complexes = [rouquier(w) for w in braids]
        pairs = {"12": (0, 1), "23": (1, 2), "13": (0, 2)}
        found = {}
        for label, (i, j) in pairs.items():
            search = find_homotopy_equivalence(complexes[i], complexes[j], self._lattice_bound)
            if search.equivalence is None:
                details["missing"] = label
                return self.equivalence_report(name, search, details)
            found[label] = search.equivalence
        composite = found["23"].forward.compose(found["12"].forward)
        solved = homotopic_multiple(composite, found["13"].forward)
        if solved is None:
            return CheckReport(name, Verdict.FAIL, REASON_MISMATCH, details)
        scalar, _ = solved
        details["scalar"] = str(scalar)
        if scalar == 0:
            return CheckReport(name, Verdict.FAIL, REASON_ZERO_SCALAR, details)
        return CheckReport(name, Verdict.PASS, REASON_OK, details)
