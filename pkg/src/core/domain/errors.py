"""
도메인 예외 정의

입력 파싱 오류와 실현(realization) 내부 불일치를 구분합니다.
"""


class WordParseError(ValueError):
    """텍스트 입력 파싱 오류 (1부터 세는 행/열 위치 포함)"""

    def __init__(self, message: str, line: int = 1, column: int = 1, reason: str = "PARSE_ERROR"):
        super().__init__(f"{line}행 {column}열: {message}")
        self.line = line
        self.column = column
        self.reason = reason

    def to_dict(self) -> dict:
        return {
            "reason": self.reason,
            "line": self.line,
            "column": self.column,
            "message": str(self),
        }


class RealizationError(RuntimeError):
    """구성된 행렬이 기대한 항등식을 만족하지 않을 때 (실현 버그 신호)"""
