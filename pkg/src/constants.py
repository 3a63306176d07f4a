"""
계산 엔진 전역 상수 정의

검증 스위트, 탐색 격자, 출력 스키마에서 쓰는 고정값들을 모아둡니다.
매직 넘버를 제거하고 단일 진실 소스를 유지하기 위함입니다.
"""

# 출력 스키마
SCHEMA_VERSION = 1  # JSON 보고서 스키마 버전

# 다항식
VARIABLE_PREFIX = "x"  # 변수 이름 접두사 (x1..xn)
VARIABLE_DEGREE = 2  # 각 변수의 내부 차수

# 동차 분해 호몰로지
DEFAULT_DEGREE_WINDOW = (-10, 10)  # 내부 차수 검사 구간 (양끝 포함)

# 호모토피 동치 탐색
DEFAULT_LATTICE_BOUND = 2  # 계수 격자 {-2..2}
LATTICE_COEFFICIENT_ORDER = (0, 1, -1, 2, -2, 3, -3)  # 자리별 계수 시도 순서
RELABEL_LATTICE_BOUND = 2  # 재표기 동형 탐색 시 스칼라 격자
R3_CLASS_DIMENSIONS = (1, 2, 1)  # 3 가닥 R3: (호모토피류, 차수 0 사슬 사상, 영호모토픽)

# 검증 스위트 기본값
DEFAULT_WORKERS = 1  # 1이면 프로세스 풀을 쓰지 않음
DEFAULT_MAX_WORD_LENGTH = 5  # 단어 길이 상한
DEFAULT_STRANDS = 3  # 가닥 수 기본값
FREENESS_MAX_WORD_LENGTH = 4  # 자유성 검사 단어 길이 상한
FREENESS_MAX_STRANDS = 4  # 자유성 검사 가닥 수 상한
HOM_STABILITY_MAX_LENGTH = 2  # 해 공간 안정성 검사 단어 길이 상한

# 종료 코드
EXIT_PASS = 0  # 모든 검사 통과
EXIT_FAIL = 1  # 검증 실패
EXIT_INCONCLUSIVE = 2  # 격자 탐색 소진
EXIT_USAGE = 3  # 사용법 / 파싱 오류

# 사유 코드
REASON_OK = "OK"
REASON_NOT_FOUND_WITHIN_LATTICE = "NOT_FOUND_WITHIN_LATTICE"
REASON_WITNESS_REJECTED = "WITNESS_REJECTED"
REASON_NONZERO_HOMOLOGY = "NONZERO_HOMOLOGY"
REASON_MISMATCH = "MISMATCH"
REASON_DIFFERENTIAL_SQUARE = "D_SQUARED_NONZERO"
REASON_NOT_CHAIN_MAP = "NOT_CHAIN_MAP"
REASON_REALIZATION_ERROR = "REALIZATION_ERROR"
REASON_ZERO_SCALAR = "ZERO_SCALAR"

# 캐시
CACHE_FILE_SUFFIX = ".json"  # 결과 캐시 파일 확장자

# 프리브레이딩 검사 표본
HEXAGON_TRIPLES = ((1, 1, 1), (2, 1, 1), (1, 2, 1), (1, 1, 2))  # (a, b, c) 가닥 수
HLOC_PAIRS = ((1, 1), (2, 1), (1, 2))  # (m, n)
COXETER_PAIRS = ((2, 1), (1, 2), (2, 2))  # (m, n)
NATURALITY_CASES = (  # (Y1, Y2) 보트-사멜슨 단어 텍스트
    ("2:[1]:0", "1:[]:0"),
    ("1:[]:0", "2:[1]:0"),
    ("1:[]:0", "1:[]:0"),
)
TRANSITIVE_TRIPLES = (  # 같은 3 가닥 브레이드의 단어 세 개
    ("s1 s1'", "", "s2 s2'"),
    ("s1 s2 s1", "s2 s1 s2", "s1 s2 s1"),
    ("s1", "s1 s2 s2'", "s2 s2' s1"),
)
TRANSITIVE_STRANDS = 3
