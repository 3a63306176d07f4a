"""
실행 설정 DTO 정의

우선순위: CLI 플래그 > 설정 파일 > constants 기본값
"""

from dataclasses import dataclass, replace
from typing import Dict, Optional, Tuple

from constants import (
    DEFAULT_DEGREE_WINDOW,
    DEFAULT_LATTICE_BOUND,
    DEFAULT_MAX_WORD_LENGTH,
    DEFAULT_STRANDS,
    DEFAULT_WORKERS,
)


@dataclass(frozen=True)
class RunConfig:
    """서비스에 넘기는 확정된 설정"""

    window: Tuple[int, int] = DEFAULT_DEGREE_WINDOW
    lattice_bound: int = DEFAULT_LATTICE_BOUND
    workers: int = DEFAULT_WORKERS
    max_len: int = DEFAULT_MAX_WORD_LENGTH
    strands: int = DEFAULT_STRANDS
    cache_dir: Optional[str] = None
    progress: bool = False
    timings: bool = False

    def __post_init__(self):
        low, high = self.window
        if low > high:
            raise ValueError(f"차수 창의 하한이 상한보다 큽니다: {self.window}")
        if self.lattice_bound < 1:
            raise ValueError(f"격자 범위는 1 이상이어야 합니다: {self.lattice_bound}")
        if self.workers < 1:
            raise ValueError(f"작업자 수는 1 이상이어야 합니다: {self.workers}")
        if self.max_len < 0:
            raise ValueError(f"단어 길이 상한은 0 이상이어야 합니다: {self.max_len}")
        if self.strands < 1:
            raise ValueError(f"가닥 수는 1 이상이어야 합니다: {self.strands}")

    def merged(self, overrides: Dict[str, object]) -> "RunConfig":
        """None 이 아닌 값만 덮어쓴 새 설정

        window_min / window_max 는 window 의 한쪽 끝만 바꿉니다.
        """
        values = {k: v for k, v in overrides.items() if v is not None}
        low, high = self.window
        low = values.pop("window_min", low)
        high = values.pop("window_max", high)
        if "window" not in values:
            values["window"] = (low, high)
        return replace(self, **values)

    def to_dict(self) -> Dict[str, object]:
        return {
            "window": list(self.window),
            "lattice_bound": self.lattice_bound,
            "max_len": self.max_len,
            "strands": self.strands,
        }
