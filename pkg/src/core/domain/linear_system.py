"""
ℚ 위의 정확한 희소 선형계

미지수는 0..n-1 정수로, 방정식은 임의의 해시 가능한 키로 모읍니다.
소거는 sympy DomainMatrix(QQ) 의 rref 에 맡기고,
영공간 기저와 특수해는 피벗 정보로부터 결정적으로 만듭니다.
"""

import logging
from fractions import Fraction
from typing import Dict, Hashable, List, Optional, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .poly import to_fraction, to_qq

logger = logging.getLogger(__name__)

Vector = Dict[int, Fraction]


class EquationCollector:
    """키별로 미지수 계수를 누적하는 방정식 모음"""

    def __init__(self, num_unknowns: int):
        self.num_unknowns = num_unknowns
        self._rows: Dict[Hashable, Dict[int, object]] = {}
        self._rhs: Dict[Hashable, object] = {}

    def add(self, key: Hashable, unknown: int, coefficient) -> None:
        row = self._rows.setdefault(key, {})
        value = to_qq(coefficient)
        row[unknown] = row[unknown] + value if unknown in row else value

    def add_constant(self, key: Hashable, value) -> None:
        """우변에 value 를 더합니다 (Σ 계수·미지수 = 우변)."""
        self._rows.setdefault(key, {})
        current = self._rhs.get(key, QQ(0))
        self._rhs[key] = current + to_qq(value)

    @property
    def num_equations(self) -> int:
        return len(self._rows)

    def matrix(self, with_rhs: bool = False) -> DomainMatrix:
        keys = list(self._rows.keys())
        width = self.num_unknowns + (1 if with_rhs else 0)
        data: Dict[int, Dict[int, object]] = {}
        for i, key in enumerate(keys):
            row = {j: v for j, v in self._rows[key].items() if v}
            if with_rhs and self._rhs.get(key):
                row[self.num_unknowns] = self._rhs[key]
            if row:
                data[i] = row
        return DomainMatrix(data, (len(keys), width), QQ)

    def nullspace(self) -> List[Vector]:
        return nullspace(self.matrix(), self.num_unknowns)

    def solve(self) -> Optional[Vector]:
        """특수해 하나 (자유 변수는 0), 해가 없으면 None"""
        logger.debug("선형계 풀이: 미지수 %d, 방정식 %d", self.num_unknowns, self.num_equations)
        if self.num_unknowns == 0:
            return {} if not any(self._rhs.values()) else None
        if not self._rows:
            return {}
        reduced, pivots = self.matrix(with_rhs=True).rref()
        if self.num_unknowns in pivots:
            return None
        dok = reduced.to_dok()
        solution: Vector = {}
        for row, column in enumerate(pivots):
            value = dok.get((row, self.num_unknowns))
            if value:
                solution[column] = to_fraction(value)
        return solution


def nullspace(matrix: DomainMatrix, width: int) -> List[Vector]:
    """rref 로 구한 영공간 기저 (자유 열마다 하나, 자유 열 성분 1)"""
    rows = matrix.shape[0]
    if width == 0:
        return []
    if rows == 0:
        return [{j: Fraction(1)} for j in range(width)]
    reduced, pivots = matrix.rref()
    dok = reduced.to_dok()
    pivot_set = set(pivots)
    by_column: Dict[int, List[Tuple[int, object]]] = {}
    for (row, column), value in dok.items():
        if column not in pivot_set and value:
            by_column.setdefault(column, []).append((row, value))
    basis = []
    for free in range(width):
        if free in pivot_set:
            continue
        vector: Vector = {free: Fraction(1)}
        for row, value in by_column.get(free, ()):
            vector[pivots[row]] = -to_fraction(value)
        basis.append(vector)
    return basis


def rank_of_columns(columns: Sequence[Dict[Hashable, Fraction]]) -> Tuple[int, Tuple[int, ...]]:
    """열 벡터 모음의 계수와 피벗 열 번호 (앞쪽 열 우선)"""
    if not columns:
        return 0, ()
    keys: Dict[Hashable, int] = {}
    data: Dict[int, Dict[int, object]] = {}
    for j, column in enumerate(columns):
        for key, value in column.items():
            if value:
                row = keys.setdefault(key, len(keys))
                data.setdefault(row, {})[j] = to_qq(value)
    if not keys:
        return 0, ()
    _, pivots = DomainMatrix(data, (len(keys), len(columns)), QQ).rref()
    return len(pivots), tuple(pivots)


def matrix_rank(entries: Dict[Tuple[int, int], object], rows: int, cols: int) -> int:
    if rows == 0 or cols == 0 or not entries:
        return 0
    data: Dict[int, Dict[int, object]] = {}
    for (r, c), value in entries.items():
        if value:
            data.setdefault(r, {})[c] = to_qq(value)
    return DomainMatrix(data, (rows, cols), QQ).rank()


def determinant(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    size = len(rows)
    if size == 0:
        return Fraction(1)
    data = {r: {c: to_qq(v) for c, v in enumerate(row) if v} for r, row in enumerate(rows)}
    return to_fraction(DomainMatrix(data, (size, size), QQ).det())


def inverse_matrix(rows: Sequence[Sequence[Fraction]]) -> List[List[Fraction]]:
    size = len(rows)
    if size == 0:
        return []
    data = {r: {c: to_qq(v) for c, v in enumerate(row) if v} for r, row in enumerate(rows)}
    inverse = DomainMatrix(data, (size, size), QQ).inv()
    dok = inverse.to_dok()
    return [[to_fraction(dok.get((r, c), QQ(0))) for c in range(size)] for r in range(size)]
