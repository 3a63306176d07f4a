"""
교차 부호 정의

브레이드 생성원과 케이블 교차의 양/음 방향을 구분합니다.
"""

from enum import Enum, auto


class CrossingSign(Enum):
    """교차 부호"""

    POSITIVE = auto()  # σ_i
    NEGATIVE = auto()  # σ_i^{-1}

    @property
    def symbol(self) -> str:
        """텍스트 표기용 부호 문자"""
        return "+" if self is CrossingSign.POSITIVE else "-"

    def inverted(self) -> "CrossingSign":
        return CrossingSign.NEGATIVE if self is CrossingSign.POSITIVE else CrossingSign.POSITIVE

    @classmethod
    def parse(cls, text: str) -> "CrossingSign":
        """'+', '-', 'pos', 'neg' 표기를 해석합니다."""
        value = text.strip().lower()
        if value in ("+", "pos", "positive"):
            return cls.POSITIVE
        if value in ("-", "neg", "negative"):
            return cls.NEGATIVE
        raise ValueError(f"알 수 없는 교차 부호입니다: {text}")
