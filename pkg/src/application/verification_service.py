"""
검증 스위트 응용 서비스

스위트마다 서로 독립인 검사 작업 목록을 만들고, 작업자가 둘 이상이면
multiprocessing.Pool 의 imap 으로 나눠 돌립니다. 결과는 제출 순서대로 모읍니다.
결과 캐시가 있으면 이미 계산한 검사는 건너뜁니다.
"""

import itertools
import logging
import time
from dataclasses import dataclass, replace
from multiprocessing import Pool
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from tqdm import tqdm

from common.enums import CrossingSign, SuiteType, Verdict
from constants import (
    COXETER_PAIRS,
    FREENESS_MAX_STRANDS,
    FREENESS_MAX_WORD_LENGTH,
    HEXAGON_TRIPLES,
    HLOC_PAIRS,
    HOM_STABILITY_MAX_LENGTH,
    NATURALITY_CASES,
    R3_CLASS_DIMENSIONS,
    REASON_DIFFERENTIAL_SQUARE,
    REASON_MISMATCH,
    REASON_OK,
    REASON_REALIZATION_ERROR,
    TRANSITIVE_TRIPLES,
)
from core.domain.bimodule import realize, shift, verify_realization
from core.domain.complex import Complex
from core.domain.equivalence import find_homotopy_equivalence, find_relabeling_isomorphism
from core.domain.errors import RealizationError
from core.domain.gaussian import gaussian_eliminate
from core.domain.hecke import HeckeElement, braid_image
from core.domain.homotopy import homotopy_class_space
from core.domain.morphism import hom_cache_info, hom_dimension, hom_dimension_bruteforce
from core.domain.rouquier import rouquier
from core.domain.slides import AtomicConfig, atomic_search_report
from core.domain.value_objects import LaurentPoly
from core.domain.words import BraidLetter, BraidWord, BSWord, parse_bs_word
from core.ports.result_cache_port import ResultCachePort, cache_key

from .dtos.report_dto import CheckReport, SuiteReport
from .dtos.run_config import RunConfig
from .prebraid_service import FIRST_HEXAGON, SECOND_HEXAGON, PrebraidService

logger = logging.getLogger(__name__)

SIGNS = (CrossingSign.POSITIVE, CrossingSign.NEGATIVE)
PREBRAID_SUITE = "prebraid"


@dataclass(frozen=True)
class CheckTask:
    """작업자에게 넘기는 검사 하나 (피클 가능한 값만)"""

    suite: str
    kind: str
    args: Tuple

    @property
    def label(self) -> str:
        return f"{self.kind}{self.args}"


# 작업 실행 함수 (모듈 수준이어야 프로세스 풀로 넘길 수 있습니다)
def _prebraid(config: RunConfig) -> PrebraidService:
    return PrebraidService(config.lattice_bound, config.window)


def _braid(strands: int, pairs: Sequence[Tuple[int, CrossingSign]]) -> BraidWord:
    return BraidWord(strands, tuple(BraidLetter(i, sign) for i, sign in pairs))


def _reidemeister_two(args: Tuple, config: RunConfig) -> CheckReport:
    """F(σ_i^{±1} σ_i^{∓1}) ≃ R, 가우스 소거 결과가 0 차의 R 하나"""
    i, strands, sign_name = args
    sign = CrossingSign[sign_name]
    word = _braid(strands, [(i, sign), (i, sign.inverted())])
    name = f"r2({word.format()})"
    complex_ = rouquier(word)
    unit = Complex.unit(strands)
    search = find_homotopy_equivalence(complex_, unit, config.lattice_bound)
    report = _prebraid(config).equivalence_report(name, search, {"word": word.format()})
    if not report.passed:
        return report
    reduced = gaussian_eliminate(complex_)
    details = dict(report.details)
    details.update({"splits": reduced.splits, "cancellations": reduced.cancellations, "reduced": reduced.reduced.pretty()})
    if not reduced.reduced.same_as(unit):
        return CheckReport(name, Verdict.FAIL, REASON_MISMATCH, details)
    return CheckReport(name, Verdict.PASS, REASON_OK, details)


def _braid_relation(args: Tuple, config: RunConfig) -> CheckReport:
    """F(σ_i σ_{i+1} σ_i) ≃ F(σ_{i+1} σ_i σ_{i+1}) 와 호모토피류 공간 차원

    3 가닥에서는 세 차원이 R3_CLASS_DIMENSIONS 와 같아야 합니다.
    """
    i, strands, sign_name = args
    sign = CrossingSign[sign_name]
    left = _braid(strands, [(i, sign), (i + 1, sign), (i, sign)])
    right = _braid(strands, [(i + 1, sign), (i, sign), (i + 1, sign)])
    name = f"r3({left.format()} ~ {right.format()})"
    source, target = rouquier(left), rouquier(right)
    classes = homotopy_class_space(source, target)
    details = {
        "dimension": classes.dimension,
        "chain_map_dimension": classes.chain_map_dimension,
        "null_homotopic_dimension": classes.null_homotopic_dimension,
    }
    observed = (classes.dimension, classes.chain_map_dimension, classes.null_homotopic_dimension)
    if strands == 3 and observed != R3_CLASS_DIMENSIONS:
        details["expected"] = list(R3_CLASS_DIMENSIONS)
        return CheckReport(name, Verdict.FAIL, REASON_MISMATCH, details)
    search = find_homotopy_equivalence(source, target, config.lattice_bound)
    return _prebraid(config).equivalence_report(name, search, details)


def _far_commutation(args: Tuple, config: RunConfig) -> CheckReport:
    """|i − j| ≥ 2 이면 F(σ_i σ_j) 와 F(σ_j σ_i) 는 재배열만으로 동형"""
    i, j, strands, first_name, second_name = args
    first, second = CrossingSign[first_name], CrossingSign[second_name]
    left = _braid(strands, [(i, first), (j, second)])
    right = _braid(strands, [(j, second), (i, first)])
    name = f"farcomm({left.format()} ≅ {right.format()})"
    relabel = find_relabeling_isomorphism(rouquier(left), rouquier(right))
    if relabel is None or not relabel.verify():
        return CheckReport(name, Verdict.FAIL, REASON_MISMATCH)
    return CheckReport(name, Verdict.PASS, REASON_OK, {"witness_sizes": relabel.witness_sizes()})


def _atomic(args: Tuple, config: RunConfig) -> CheckReport:
    m, n, sign_name = args
    atomic = AtomicConfig(m, n, CrossingSign[sign_name])
    search = atomic_search_report(atomic, config.lattice_bound)
    return _prebraid(config).equivalence_report(f"atomic{atomic.label()}", search, {})


def _naturality(args: Tuple, config: RunConfig) -> CheckReport:
    first, second, sign_name = args
    return _prebraid(config).naturality_check(parse_bs_word(first), parse_bs_word(second), CrossingSign[sign_name])


def _hexagon(args: Tuple, config: RunConfig) -> CheckReport:
    a, b, c, hexagon, sign_name = args
    return _prebraid(config).hexagon_check(a, b, c, hexagon, CrossingSign[sign_name])


def _hloc(args: Tuple, config: RunConfig) -> CheckReport:
    m, n, sign_name = args
    return _prebraid(config).hloc_compatibility(m, n, CrossingSign[sign_name])


def _coxeter(args: Tuple, config: RunConfig) -> CheckReport:
    m, n, sign_name = args
    return _prebraid(config).coxeter_factorization_check(m, n, CrossingSign[sign_name])


def _transitive(args: Tuple, config: RunConfig) -> CheckReport:
    return _prebraid(config).transitive_check(args)


def all_braid_words(strands: int, length: int) -> List[BraidWord]:
    """길이 length 인 모든 브레이드 단어 (글자 번호, 부호 순)"""
    letters = [BraidLetter(i, sign) for i in range(1, strands) for sign in SIGNS]
    return [BraidWord(strands, tuple(word)) for word in itertools.product(letters, repeat=length)]


def _decategorification(args: Tuple, config: RunConfig) -> CheckReport:
    """길이 L 인 모든 단어에서 차수 0 동차 미분과 d∘d = 0, χ(F(w)) = [w], [w]·[w^-1] = 1"""
    strands, length = args
    name = f"decat(n={strands}, len={length})"
    one = HeckeElement.one(strands)
    words = all_braid_words(strands, length)
    for word in words:
        try:
            complex_ = rouquier(word).validated()
        except ValueError as e:
            return CheckReport(name, Verdict.FAIL, REASON_DIFFERENTIAL_SQUARE, {"word": word.format(), "error": str(e)})
        image = braid_image(word)
        if complex_.euler_characteristic() != image:
            return CheckReport(name, Verdict.FAIL, REASON_MISMATCH, {"word": word.format(), "hecke": image.format()})
        if image * braid_image(word.inverse()) != one:
            return CheckReport(name, Verdict.FAIL, REASON_MISMATCH, {"word": word.format(), "inverse": True})
    return CheckReport(name, Verdict.PASS, REASON_OK, {"words": len(words)})


def _freeness(args: Tuple, config: RunConfig) -> CheckReport:
    """길이 L 인 모든 보트-사멜슨 단어: 계수 2^L, 등급 계수 (q^-1 + q)^L, 실현 검증"""
    strands, length = args
    name = f"freeness(n={strands}, len={length})"
    expected = LaurentPoly.from_dict({-1: 1, 1: 1}) ** length
    count = 0
    for letters in itertools.product(range(1, strands), repeat=length):
        module = realize(BSWord(strands, letters))
        count += 1
        if module.rank != 2**length or module.graded_rank() != expected:
            return CheckReport(name, Verdict.FAIL, REASON_MISMATCH, {"word": list(letters)})
        if not verify_realization(module):
            return CheckReport(name, Verdict.FAIL, REASON_REALIZATION_ERROR, {"word": list(letters)})
    return CheckReport(name, Verdict.PASS, REASON_OK, {"words": count})


def _hom_stability(args: Tuple, config: RunConfig) -> CheckReport:
    """End^0(B_w) 차원이 두 배 차수 상한의 독립 풀이와 같은지"""
    strands, length = args
    name = f"hom-stability(n={strands}, len={length})"
    dims = {}
    for letters in itertools.product(range(1, strands), repeat=length):
        module = realize(BSWord(strands, letters))
        solved, brute = hom_dimension(module, module, 0), hom_dimension_bruteforce(module, module, 0)
        dims[",".join(map(str, letters))] = solved
        if solved != brute:
            return CheckReport(name, Verdict.FAIL, REASON_MISMATCH, {"word": list(letters), "solved": solved, "bruteforce": brute})
    return CheckReport(name, Verdict.PASS, REASON_OK, {"dimensions": dims})


def _grading_identity(args: Tuple, config: RunConfig) -> CheckReport:
    """dim Hom(M⟨k⟩, N⟨l⟩)_d = dim Hom(M, N)_{d+k−l}"""
    strands, k, l = args
    name = f"grading(n={strands}, k={k}, l={l})"
    source, target = realize(BSWord(strands, (1,))), realize(BSWord(strands, ()))
    for d in range(-2, 3):
        left = hom_dimension(shift(source, k), shift(target, l), d)
        right = hom_dimension(source, target, d + k - l)
        if left != right:
            return CheckReport(name, Verdict.FAIL, REASON_MISMATCH, {"degree": d, "shifted": left, "unshifted": right})
    return CheckReport(name, Verdict.PASS, REASON_OK)


EXECUTORS: Dict[str, Callable[[Tuple, RunConfig], CheckReport]] = {
    "r2": _reidemeister_two,
    "r3": _braid_relation,
    "farcomm": _far_commutation,
    "atomic": _atomic,
    "naturality": _naturality,
    "hexagon": _hexagon,
    "hloc": _hloc,
    "coxeter": _coxeter,
    "transitive": _transitive,
    "decat": _decategorification,
    "freeness": _freeness,
    "hom-stability": _hom_stability,
    "grading": _grading_identity,
}


def run_task(payload: Tuple[CheckTask, RunConfig]) -> CheckReport:
    """검사 하나를 실행하고 소요 시간을 붙입니다. 실현 오류는 FAIL 판정으로 남깁니다."""
    task, config = payload
    started = time.perf_counter()
    try:
        report = EXECUTORS[task.kind](task.args, config)
    except RealizationError as e:
        logger.error("%s: %s", task.label, e)
        report = CheckReport(task.label, Verdict.FAIL, REASON_REALIZATION_ERROR, {"error": str(e)})
    elapsed = time.perf_counter() - started
    logger.info("%s: %s (%.2fs)", report.name, report.verdict.name, elapsed)
    logger.debug("Hom 캐시: %s", hom_cache_info())
    return replace(report, elapsed=elapsed)


class VerificationService:
    """검증 스위트 응용 서비스"""

    def __init__(self, config: RunConfig, cache: Optional[ResultCachePort] = None):
        """
        Args:
            config: 확정된 실행 설정
            cache: 검사 보고서 캐시 (없으면 매번 계산)
        """
        self._config = config
        self._cache = cache

    # 작업 목록
    def build_tasks(self, suite: SuiteType) -> List[CheckTask]:
        builders = {
            SuiteType.R2: self._r2_tasks,
            SuiteType.R3: self._r3_tasks,
            SuiteType.FARCOMM: self._farcomm_tasks,
            SuiteType.SLIDES: self._slides_tasks,
            SuiteType.HEXAGONS: self._hexagon_tasks,
            SuiteType.HLOC: self._hloc_tasks,
            SuiteType.DECAT: self._decat_tasks,
            SuiteType.COXETER: self._coxeter_tasks,
            SuiteType.FREENESS: self._freeness_tasks,
            SuiteType.TRANSITIVE: self._transitive_tasks,
        }
        return [CheckTask(suite.value, kind, args) for kind, args in builders[suite]()]

    def _r2_tasks(self):
        strands = max(self._config.strands, 2)
        return [("r2", (i, strands, sign.name)) for i in range(1, strands) for sign in SIGNS]

    def _r3_tasks(self):
        strands = max(self._config.strands, 3)
        return [("r3", (i, strands, sign.name)) for i in range(1, strands - 1) for sign in SIGNS]

    def _farcomm_tasks(self):
        strands = max(self._config.strands, 4)
        signs = [(a.name, b.name) for a in SIGNS for b in SIGNS]
        return [
            ("farcomm", (i, j, strands) + pair)
            for i in range(1, strands)
            for j in range(i + 2, strands)
            for pair in signs
        ]

    def _slides_tasks(self):
        atomic = [("atomic", (m, n, sign.name)) for m, n in ((1, 2), (2, 1)) for sign in SIGNS]
        return atomic + self._naturality_tasks()

    def _naturality_tasks(self):
        return [("naturality", (first, second, sign.name)) for first, second in NATURALITY_CASES for sign in SIGNS]

    def _hexagon_tasks(self):
        return [
            ("hexagon", (a, b, c, hexagon, sign.name))
            for a, b, c in HEXAGON_TRIPLES
            for hexagon in (FIRST_HEXAGON, SECOND_HEXAGON)
            for sign in SIGNS
        ]

    def _hloc_tasks(self):
        return [("hloc", (m, n, sign.name)) for m, n in HLOC_PAIRS for sign in SIGNS]

    def _decat_tasks(self):
        strands = max(self._config.strands, 1)
        return [("decat", (strands, length)) for length in range(self._config.max_len + 1)]

    def _coxeter_tasks(self):
        return [("coxeter", (m, n, sign.name)) for m, n in COXETER_PAIRS for sign in SIGNS]

    def _freeness_tasks(self):
        strands = max(min(self._config.strands, FREENESS_MAX_STRANDS), 2)
        max_len = min(self._config.max_len, FREENESS_MAX_WORD_LENGTH)
        tasks = [("freeness", (strands, length)) for length in range(max_len + 1)]
        stability_strands = min(strands, 3)
        tasks += [("hom-stability", (stability_strands, length)) for length in range(min(max_len, HOM_STABILITY_MAX_LENGTH) + 1)]
        tasks += [("grading", (2, k, l)) for k in (-1, 0, 1) for l in (-1, 0, 1)]
        return tasks

    def _transitive_tasks(self):
        return [("transitive", triple) for triple in TRANSITIVE_TRIPLES]

    # 실행
    def run(self, suite: SuiteType) -> SuiteReport:
        logger.info("스위트 시작: %s", suite.value)
        return self._execute(suite.value, self.build_tasks(suite))

    def run_prebraid_suite(self) -> SuiteReport:
        """육각형, 슬라이드 자연성, 순열 쌍가군 호환성을 한 보고서로"""
        tasks = [
            CheckTask(PREBRAID_SUITE, kind, args)
            for kind, args in self._hexagon_tasks() + self._naturality_tasks() + self._hloc_tasks()
        ]
        return self._execute(PREBRAID_SUITE, tasks)

    def _key(self, task: CheckTask) -> str:
        return cache_key("check", {"kind": task.kind, "args": list(task.args), "config": self._config.to_dict()})

    def _execute(self, suite: str, tasks: List[CheckTask]) -> SuiteReport:
        reports: List[Optional[CheckReport]] = [None] * len(tasks)
        if self._cache is not None:
            for position, task in enumerate(tasks):
                cached = self._cache.get(self._key(task))
                if cached is not None:
                    reports[position] = CheckReport.from_dict(cached)
        pending = [position for position, report in enumerate(reports) if report is None]
        if len(pending) < len(tasks):
            logger.info("%s: 캐시에서 %d 개 검사를 불러왔습니다", suite, len(tasks) - len(pending))

        payloads = [(tasks[position], self._config) for position in pending]
        workers = min(self._config.workers, len(payloads))
        if workers > 1:
            with Pool(workers) as pool:
                self._collect(suite, pool.imap(run_task, payloads), pending, tasks, reports)
        else:
            self._collect(suite, map(run_task, payloads), pending, tasks, reports)

        report = SuiteReport(suite, tuple(reports), self._config.to_dict())
        logger.info("스위트 %s: %s %s", suite, report.verdict.name, report.counts())
        return report

    def _collect(self, suite, results, pending, tasks, reports) -> None:
        progress = tqdm(results, total=len(pending), desc=suite, disable=not self._config.progress)
        for position, report in zip(pending, progress):
            reports[position] = report
            if self._cache is not None:
                self._cache.put(self._key(tasks[position]), report.to_dict(timings=True))
