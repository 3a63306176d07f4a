"""
key=value 설정 파일 로더

    # 주석
    window_min = -10
    window_max = 10
    lattice_bound = 2

빈 행과 '#' 주석은 건너뜁니다. 모르는 키는 경고 후 무시합니다.
"""

import logging
import os
from typing import Callable, Dict

from core.ports.config_loader_port import ConfigLoaderPort

logger = logging.getLogger(__name__)


def _positive(value: str) -> int:
    number = int(value)
    if number < 1:
        raise ValueError(f"1 이상이어야 합니다: {number}")
    return number


def _non_negative(value: str) -> int:
    number = int(value)
    if number < 0:
        raise ValueError(f"0 이상이어야 합니다: {number}")
    return number


def _text(value: str) -> str:
    if not value:
        raise ValueError("빈 값입니다")
    return value


KNOWN_KEYS: Dict[str, Callable[[str], object]] = {
    "window_min": int,
    "window_max": int,
    "lattice_bound": _positive,
    "workers": _positive,
    "max_len": _non_negative,
    "strands": _positive,
    "cache_dir": _text,
}


class KeyValueConfigLoader(ConfigLoaderPort):
    """TOML 비슷한 key=value 부분집합 구현체"""

    def load(self, path: str) -> Dict[str, object]:
        if not os.path.exists(path):
            raise FileNotFoundError(f"설정 파일을 찾을 수 없습니다: {path}")
        try:
            with open(path, "r", encoding="utf-8") as file:
                lines = file.read().splitlines()
        except UnicodeDecodeError:
            raise ValueError(f"설정 파일 인코딩 오류. UTF-8로 저장되어 있는지 확인하세요: {path}")
        return self.parse(lines)

    def parse(self, lines) -> Dict[str, object]:
        values: Dict[str, object] = {}
        for row_num, raw in enumerate(lines, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"설정 {row_num}행: 'key = value' 형식이 아닙니다: {raw!r}")
            key, value = (part.strip() for part in line.split("=", 1))
            value = value.strip("\"'")
            if key not in KNOWN_KEYS:
                logger.warning("설정 %d행: 알 수 없는 키 '%s' 를 무시합니다", row_num, key)
                continue
            try:
                values[key] = KNOWN_KEYS[key](value)
            except ValueError as e:
                raise ValueError(f"설정 {row_num}행 '{key}' 값 오류: {e}")
        if "window_min" in values and "window_max" in values and values["window_min"] > values["window_max"]:
            raise ValueError(f"설정의 window_min 이 window_max 보다 큽니다: {values['window_min']} > {values['window_max']}")
        return values
