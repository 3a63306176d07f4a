"""
계산 엔진 Enum 정의 모듈

모든 열거형을 정의하고 중앙에서 관리합니다.
"""

from .arithmetic_kind import ArithmeticKind
from .bimodule_kind import BimoduleKind
from .crossing_sign import CrossingSign
from .suite_type import SuiteType
from .verdict import Verdict

__all__ = [
    "ArithmeticKind",
    "BimoduleKind",
    "CrossingSign",
    "SuiteType",
    "Verdict",
]
