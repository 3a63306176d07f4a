"""
검증 결과 판정 정의

CLI 종료 코드와 1:1로 대응합니다.
"""

from enum import Enum, auto


class Verdict(Enum):
    """검사 판정"""

    PASS = auto()  # 정확한 증거가 재검증됨
    FAIL = auto()  # 반례 또는 증거 재검증 실패
    INCONCLUSIVE = auto()  # 격자 안에서 찾지 못함

    @classmethod
    def combine(cls, verdicts) -> "Verdict":
        """여러 판정을 하나로 합칩니다. FAIL > INCONCLUSIVE > PASS 순으로 우선합니다."""
        result = cls.PASS
        for verdict in verdicts:
            if verdict is cls.FAIL:
                return cls.FAIL
            if verdict is cls.INCONCLUSIVE:
                result = cls.INCONCLUSIVE
        return result
