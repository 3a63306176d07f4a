"""
포트 인터페이스

응용 서비스가 바깥 세계(디스크 캐시, 설정 파일)에 기대하는 계약입니다.
실제 구현은 adapters 계층에 있습니다.
"""

from .config_loader_port import ConfigLoaderPort
from .result_cache_port import ResultCachePort, cache_key

__all__ = [
    "ConfigLoaderPort",
    "ResultCachePort",
    "cache_key",
]
