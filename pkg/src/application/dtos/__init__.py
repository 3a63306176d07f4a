"""
데이터 전송 객체 (DTO) 패키지

응용 서비스와 CLI 사이에서 주고받는 불변 값들입니다.
"""

from .computation_dto import ClassesResult, HomResult, RouquierResult
from .report_dto import CheckReport, SuiteReport
from .run_config import RunConfig

__all__ = [
    "CheckReport",
    "ClassesResult",
    "HomResult",
    "RouquierResult",
    "RunConfig",
    "SuiteReport",
]
