"""
결과 캐시 포트 인터페이스
"""

import hashlib
import json
from abc import ABC, abstractmethod
from typing import Dict, Optional

from constants import SCHEMA_VERSION


def cache_key(command: str, arguments: Dict[str, object]) -> str:
    """명령 + 정렬된 인자 + 스키마 버전의 sha256"""
    payload = json.dumps({"command": command, "arguments": arguments, "schema": SCHEMA_VERSION}, sort_keys=True)
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


class ResultCachePort(ABC):
    """검사 보고서를 키별로 저장/조회하는 캐시"""

    @abstractmethod
    def get(self, key: str) -> Optional[dict]:
        """저장된 보고서를 돌려줍니다.

        Returns:
            보고서 딕셔너리, 없거나 읽을 수 없으면 None
        """
        pass

    @abstractmethod
    def put(self, key: str, report: dict) -> None:
        """보고서를 저장합니다 (같은 키는 덮어씀)."""
        pass

    @abstractmethod
    def clear(self) -> None:
        pass
