"""
JSON 파일 결과 캐시

키 하나에 파일 하나 (sha256 이름), 앞단에 메모리 딕셔너리를 둡니다.
깨진 파일은 경고만 남기고 없는 것으로 봅니다.
"""

import json
import logging
from pathlib import Path
from typing import Dict, Optional

from constants import CACHE_FILE_SUFFIX, SCHEMA_VERSION
from core.ports.result_cache_port import ResultCachePort, cache_key

logger = logging.getLogger(__name__)


class JsonResultCache(ResultCachePort):
    """디스크 JSON 캐시 구현체"""

    def __init__(self, cache_dir: str):
        self._directory = Path(cache_dir)
        self._directory.mkdir(parents=True, exist_ok=True)
        self._memory: Dict[str, dict] = {}

    def _path(self, key: str) -> Path:
        return self._directory / f"{key}{CACHE_FILE_SUFFIX}"

    def get(self, key: str) -> Optional[dict]:
        if key in self._memory:
            return self._memory[key]
        path = self._path(key)
        if not path.exists():
            return None
        try:
            with open(path, "r", encoding="utf-8") as file:
                report = json.load(file)
        except (OSError, UnicodeDecodeError, json.JSONDecodeError) as e:
            logger.warning("캐시 파일을 읽을 수 없어 무시합니다: %s (%s)", path, e)
            return None
        if not isinstance(report, dict) or report.get("schema") != SCHEMA_VERSION:
            logger.warning("캐시 파일 스키마가 달라 무시합니다: %s", path)
            return None
        self._memory[key] = report
        return report

    def put(self, key: str, report: dict) -> None:
        stored = dict(report)
        stored["schema"] = SCHEMA_VERSION
        self._memory[key] = stored
        path = self._path(key)
        try:
            with open(path, "w", encoding="utf-8") as file:
                json.dump(stored, file, sort_keys=True, ensure_ascii=False, indent=2)
        except OSError as e:
            logger.warning("캐시 파일을 쓸 수 없습니다: %s (%s)", path, e)

    def clear(self) -> None:
        self._memory.clear()
        for path in self._directory.glob(f"*{CACHE_FILE_SUFFIX}"):
            path.unlink()
