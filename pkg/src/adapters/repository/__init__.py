"""
Repository 어댑터 패키지

디스크와의 연결을 담당하는 어댑터들을 포함합니다.
- key=value 설정 파일 읽기
- JSON 결과 캐시 저장/로드
- 도메인 객체의 JSON 직렬화
"""

from core.ports.result_cache_port import cache_key

from .json_result_cache import JsonResultCache
from .key_value_config_loader import KeyValueConfigLoader

__all__ = [
    "JsonResultCache",
    "KeyValueConfigLoader",
    "cache_key",
]
