"""
설정 로더 포트 인터페이스
"""

from abc import ABC, abstractmethod
from typing import Dict


class ConfigLoaderPort(ABC):
    """key=value 설정 파일을 읽는 인터페이스"""

    @abstractmethod
    def load(self, path: str) -> Dict[str, object]:
        """설정 파일을 읽어 알려진 키만 타입 변환해 돌려줍니다.

        Args:
            path: 설정 파일 경로

        Returns:
            키 → 값 딕셔너리 (정수, 정수 쌍, 문자열)

        Raises:
            FileNotFoundError: 파일이 없을 때
            ValueError: 값 형식이 잘못되었을 때 (행 번호 포함)
        """
        pass
