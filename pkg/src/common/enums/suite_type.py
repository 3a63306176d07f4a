"""
검증 스위트 종류 정의

`verify <suite>` 명령의 인자와 대응합니다.
"""

from enum import Enum


class SuiteType(Enum):
    """검증 스위트"""

    R2 = "r2"  # 2차 라이데마이스터 이동
    R3 = "r3"  # 3가닥 브레이드 관계 / 정준성
    FARCOMM = "farcomm"  # 먼 생성원 교환
    SLIDES = "slides"  # 원자 슬라이드와 자연성
    HEXAGONS = "hexagons"  # 육각형 공리
    HLOC = "hloc"  # 순열 쌍가군으로의 준동형
    DECAT = "decat"  # 헤케 대수로의 탈범주화
    COXETER = "coxeter"  # 콕세터 분해
    FREENESS = "freeness"  # 자유성과 등급 계수
    TRANSITIVE = "transitive"  # 정준 동치들의 추이 정합성

    @classmethod
    def parse(cls, text: str) -> "SuiteType":
        try:
            return cls(text.strip().lower())
        except ValueError:
            names = ", ".join(s.value for s in cls)
            raise ValueError(f"알 수 없는 스위트입니다: {text} (가능: {names})")
