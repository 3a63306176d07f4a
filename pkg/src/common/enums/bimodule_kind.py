"""
쌍가군 실현 종류 정의
"""

from enum import Enum, auto


class BimoduleKind(Enum):
    """쌍가군 실현의 종류 태그"""

    BOTT_SAMELSON = auto()  # 단어 B_i...B_j 의 텐서곱
    PERMUTATION = auto()  # 오른쪽 작용이 꼬인 계수 1 쌍가군
    DIRECT_SUM = auto()  # 태그 붙은 합성분들의 형식적 직합
    MIXED = auto()  # 보트-사멜슨 단어와 순열 쌍가군이 섞인 텐서곱
