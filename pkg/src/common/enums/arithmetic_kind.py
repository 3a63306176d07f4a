"""
다항식 산술 연산 종류 정의
"""

from enum import Enum, auto


class ArithmeticKind(Enum):
    """이항 산술 연산"""

    ADD = auto()  # 덧셈
    SUB = auto()  # 뺄셈
    MUL = auto()  # 곱셈
