"""
계산 엔진 명령행 진입점

의존성 조립(설정 로더, 결과 캐시, 서비스)과 명령 분기를 맡습니다.
JSON 보고서는 stdout, 로그와 진행 막대는 stderr 로 나갑니다.

    python main.py rouquier "s1 s1'" --reduce
    python main.py hecke "s1 s2 s1" --pretty
    python main.py verify r3 --strands 3
    python main.py hom "2:[1]:0" "2:[]:-1" --deg 0
    python main.py classes "s1 s2 s1" "s2 s1 s2"
    python main.py prebraid-suite --workers 4 --timings
"""

import argparse
import logging
import sys
from typing import Dict, List, Optional, Tuple

from adapters.repository import JsonResultCache, KeyValueConfigLoader
from adapters.repository.json_codec import (
    bimodule_to_dict,
    complex_to_dict,
    document,
    dumps,
    hecke_to_dict,
    map_to_dict,
    search_to_dict,
)
from application.computation_service import ComputationService
from application.dtos.report_dto import SuiteReport
from application.dtos.run_config import RunConfig
from application.verification_service import VerificationService
from common.enums import SuiteType, Verdict
from constants import EXIT_FAIL, EXIT_INCONCLUSIVE, EXIT_PASS, EXIT_USAGE
from core.domain.errors import WordParseError

logger = logging.getLogger(__name__)

VERDICT_EXIT_CODES = {
    Verdict.PASS: EXIT_PASS,
    Verdict.FAIL: EXIT_FAIL,
    Verdict.INCONCLUSIVE: EXIT_INCONCLUSIVE,
}


class UsageError(Exception):
    """명령행 사용법 오류 (종료 코드 3)"""


class _Parser(argparse.ArgumentParser):
    """사용법 오류를 종료 코드 2 대신 UsageError 로 올립니다."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def parse_window(text: str) -> Tuple[int, int]:
    """'10' → (-10, 10), '-5,7' → (-5, 7)"""
    try:
        if "," in text:
            low, high = (int(part) for part in text.split(",", 1))
        else:
            bound = int(text)
            low, high = -abs(bound), abs(bound)
    except ValueError:
        raise argparse.ArgumentTypeError(f"차수 창 형식이 잘못되었습니다: {text!r} ('D' 또는 'lo,hi')")
    if low > high:
        raise argparse.ArgumentTypeError(f"차수 창의 하한이 상한보다 큽니다: {text!r}")
    return low, high


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key=value 설정 파일")
    common.add_argument("--cache-dir", dest="cache_dir", help="검사 결과 캐시 디렉터리")
    common.add_argument("--workers", type=int, help="검증 작업자 프로세스 수")
    common.add_argument("--window", type=parse_window, help="내부 차수 창: D 또는 lo,hi (음수는 --window=-5,7)")
    common.add_argument("--lattice-bound", dest="lattice_bound", type=int, help="호모토피류 격자 계수 상한")
    common.add_argument("--max-len", dest="max_len", type=int, help="단어 길이 상한")
    common.add_argument("--strands", type=int, help="가닥 수")
    common.add_argument("--verbose", action="store_true", help="DEBUG 로그")
    common.add_argument("--progress", action="store_true", help="진행 막대 표시 (stderr)")
    common.add_argument("--timings", action="store_true", help="보고서에 소요 시간 포함")

    parser = _Parser(prog="soergel-calc", description="타입 A 쇠르겔 계산 엔진")
    commands = parser.add_subparsers(dest="command", required=True)

    rouquier = commands.add_parser("rouquier", parents=[common], help="루키에 복합체")
    rouquier.add_argument("braid", help="브레이드 단어 (예: \"s1 s2 s1'\")")
    rouquier.add_argument("--reduce", action="store_true", help="가우스 소거 결과도 출력")
    rouquier.add_argument("--pretty", action="store_true", help="JSON 대신 텍스트")

    hecke = commands.add_parser("hecke", parents=[common], help="헤케 대수 상")
    hecke.add_argument("braid")
    hecke.add_argument("--pretty", action="store_true", help="JSON 대신 텍스트")

    verify = commands.add_parser("verify", parents=[common], help="검증 스위트")
    verify.add_argument("suite", choices=[s.value for s in SuiteType])

    hom = commands.add_parser("hom", parents=[common], help="Hom 공간 차원과 기저")
    hom.add_argument("source", help="보트-사멜슨 단어 'n:[..]:shift'")
    hom.add_argument("target")
    hom.add_argument("--deg", type=int, default=0, help="사상 차수")

    classes = commands.add_parser("classes", parents=[common], help="호모토피류 공간 차원")
    classes.add_argument("source")
    classes.add_argument("target")
    classes.add_argument("--search", action="store_true", help="격자 안에서 호모토피 동치 증인도 찾기")
    classes.add_argument("--witness", action="store_true", help="--search 로 찾은 증인의 네 사상 전체 출력")

    commands.add_parser("prebraid-suite", parents=[common], help="육각형 + 자연성 + 순열 쌍가군 호환성")
    return parser


def resolve_config(args: argparse.Namespace) -> RunConfig:
    """constants 기본값 < 설정 파일 < 명령행 플래그"""
    config = RunConfig()
    if args.config:
        config = config.merged(KeyValueConfigLoader().load(args.config))
    overrides: Dict[str, object] = {
        "window": args.window,
        "lattice_bound": args.lattice_bound,
        "workers": args.workers,
        "max_len": args.max_len,
        "strands": args.strands,
        "cache_dir": args.cache_dir,
        "progress": args.progress or None,
        "timings": args.timings or None,
    }
    return config.merged(overrides)


def _emit(data: Dict[str, object]) -> None:
    print(dumps(data))


def _run_rouquier(args, config: RunConfig) -> int:
    result = ComputationService(config.strands).rouquier(args.braid, args.reduce)
    if args.pretty:
        print(result.complex.pretty())
        if result.reduction is not None:
            print("--")
            print(result.reduction.reduced.pretty())
        return EXIT_PASS
    body: Dict[str, object] = {
        "word": result.word.format(),
        "complex": complex_to_dict(result.complex),
        "pretty": result.complex.pretty(),
        "euler": hecke_to_dict(result.euler),
    }
    if result.reduction is not None:
        body["reduced"] = complex_to_dict(result.reduction.reduced)
        body["reduction"] = {
            "splits": result.reduction.splits,
            "cancellations": result.reduction.cancellations,
            "verified": result.reduction.equivalence.verify(),
        }
    _emit(document("rouquier", body))
    return EXIT_PASS


def _run_hecke(args, config: RunConfig) -> int:
    element = ComputationService(config.strands).hecke(args.braid)
    if args.pretty:
        print(element.format())
    else:
        _emit(document("hecke", hecke_to_dict(element)))
    return EXIT_PASS


def _run_hom(args, config: RunConfig) -> int:
    result = ComputationService(config.strands).hom(args.source, args.target, args.deg)
    _emit(
        document(
            "hom",
            {
        "source": result.source.format(),
        "target": result.target.format(),
                "degree": result.degree,
                "dimension": result.dimension,
                "basis": [map_to_dict(f) for f in result.basis],
                "source_module": bimodule_to_dict(result.source_module),
                "target_module": bimodule_to_dict(result.target_module),
            },
        )
    )
    return EXIT_PASS


def _run_classes(args, config: RunConfig) -> int:
    result = ComputationService(config.strands, config.lattice_bound).classes(args.source, args.target, args.search)
    payload = {
        "source": result.source.format(),
        "target": result.target.format(),
        "dimension": result.space.dimension,
        "chain_map_dimension": result.space.chain_map_dimension,
        "null_homotopic_dimension": result.space.null_homotopic_dimension,
    }
    if result.search is not None:
        payload["equivalence"] = search_to_dict(result.search, args.witness)
    _emit(document("classes", payload))
    return EXIT_PASS


def _verification_service(config: RunConfig) -> VerificationService:
    cache = JsonResultCache(config.cache_dir) if config.cache_dir else None
    return VerificationService(config, cache)


def _suite_exit(report: SuiteReport, config: RunConfig) -> int:
    _emit(report.to_dict(config.timings))
    return VERDICT_EXIT_CODES[report.verdict]


def _run_verify(args, config: RunConfig) -> int:
    return _suite_exit(_verification_service(config).run(SuiteType.parse(args.suite)), config)


def _run_prebraid_suite(args, config: RunConfig) -> int:
    return _suite_exit(_verification_service(config).run_prebraid_suite(), config)


COMMANDS = {
    "rouquier": _run_rouquier,
    "hecke": _run_hecke,
    "verify": _run_verify,
    "hom": _run_hom,
    "classes": _run_classes,
    "prebraid-suite": _run_prebraid_suite,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(f"사용법 오류: {e}", file=sys.stderr)
        return EXIT_USAGE

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        config = resolve_config(args)
        return COMMANDS[args.command](args, config)
    except WordParseError as e:
        _emit(document("error", e.to_dict()))
        return EXIT_USAGE
    except (ValueError, FileNotFoundError) as e:
        logger.error("%s", e)
        _emit(document("error", {"reason": "USAGE", "message": str(e)}))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
