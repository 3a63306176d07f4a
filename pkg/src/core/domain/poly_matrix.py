"""
다항식 성분 희소 행렬

쌍가군의 왼쪽 작용 행렬과 사상 행렬을 표현합니다.
0 성분은 저장하지 않습니다.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple, Union

from .poly import Poly

Position = Tuple[int, int]


@dataclass(frozen=True)
class PolyMatrix:
    """rows × cols 크기, R_nvars 성분의 희소 행렬"""

    rows: int
    cols: int
    nvars: int
    entries: Dict[Position, Poly] = field(default_factory=dict)

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError(f"행렬 크기가 잘못되었습니다: {self.rows}x{self.cols}")
        pruned = {}
        for (r, c), value in self.entries.items():
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise ValueError(f"성분 위치가 범위를 벗어났습니다: ({r},{c}) in {self.rows}x{self.cols}")
            if value.nvars != self.nvars:
                raise ValueError(f"성분의 변수 개수가 다릅니다: {value.nvars} != {self.nvars}")
            if not value.is_zero():
                pruned[(r, c)] = value
        object.__setattr__(self, "entries", pruned)

    @classmethod
    def zeros(cls, rows: int, cols: int, nvars: int) -> "PolyMatrix":
        return cls(rows, cols, nvars, {})

    @classmethod
    def identity(cls, size: int, nvars: int) -> "PolyMatrix":
        return cls.scalar(size, nvars, 1)

    @classmethod
    def scalar(cls, size: int, nvars: int, value: Union[int, Fraction, Poly]) -> "PolyMatrix":
        entry = value if isinstance(value, Poly) else Poly.constant(nvars, value)
        return cls(size, size, nvars, {(k, k): entry for k in range(size)})

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Union[int, Fraction, Poly]]], nvars: int) -> "PolyMatrix":
        height = len(rows)
        width = len(rows[0]) if rows else 0
        entries = {}
        for r, row in enumerate(rows):
            if len(row) != width:
                raise ValueError(f"행 길이가 일정하지 않습니다: {len(row)} != {width}")
            for c, value in enumerate(row):
                entries[(r, c)] = value if isinstance(value, Poly) else Poly.constant(nvars, value)
        return cls(height, width, nvars, entries)

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def get(self, r: int, c: int) -> Poly:
        return self.entries.get((r, c)) or Poly.zero(self.nvars)

    def is_zero(self) -> bool:
        return not self.entries

    def is_constant(self) -> bool:
        return all(value.is_constant() for value in self.entries.values())

    def to_rows(self) -> List[List[Poly]]:
        return [[self.get(r, c) for c in range(self.cols)] for r in range(self.rows)]

    def _check_same_shape(self, other: "PolyMatrix") -> None:
        if self.shape != other.shape or self.nvars != other.nvars:
            raise ValueError(f"행렬 모양이 다릅니다: {self.shape} != {other.shape}")

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._check_same_shape(other)
        entries = dict(self.entries)
        for pos, value in other.entries.items():
            entries[pos] = entries[pos] + value if pos in entries else value
        return PolyMatrix(self.rows, self.cols, self.nvars, entries)

    def __neg__(self) -> "PolyMatrix":
        return PolyMatrix(self.rows, self.cols, self.nvars, {pos: -v for pos, v in self.entries.items()})

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        return self + (-other)

    def scale(self, factor: Union[int, Fraction, Poly]) -> "PolyMatrix":
        if not isinstance(factor, Poly) and factor == 0:
            return PolyMatrix.zeros(self.rows, self.cols, self.nvars)
        return PolyMatrix(self.rows, self.cols, self.nvars, {pos: v * factor for pos, v in self.entries.items()})

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.cols != other.rows or self.nvars != other.nvars:
            raise ValueError(f"곱할 수 없는 행렬 모양입니다: {self.shape} @ {other.shape}")
        by_row: Dict[int, List[Tuple[int, Poly]]] = {}
        for (k, c), value in other.entries.items():
            by_row.setdefault(k, []).append((c, value))
        entries: Dict[Position, Poly] = {}
        for (r, k), left in self.entries.items():
            for c, right in by_row.get(k, ()):
                product = left * right
                entries[(r, c)] = entries[(r, c)] + product if (r, c) in entries else product
        return PolyMatrix(self.rows, other.cols, self.nvars, entries)

    def reindexed(self, offset: int, new_nvars: int) -> "PolyMatrix":
        return PolyMatrix(
            self.rows,
            self.cols,
            new_nvars,
            {pos: v.reindexed(offset, new_nvars) for pos, v in self.entries.items()},
        )

    def kron(self, other: "PolyMatrix") -> "PolyMatrix":
        """같은 환 위의 크로네커 곱 (행/열 번호는 앞 인자가 상위 자리)"""
        if self.nvars != other.nvars:
            raise ValueError(f"변수 개수가 다른 행렬입니다: {self.nvars} != {other.nvars}")
        entries = {}
        for (k, a), left in self.entries.items():
            for (l, b), right in other.entries.items():
                entries[(k * other.rows + l, a * other.cols + b)] = left * right
        return PolyMatrix(self.rows * other.rows, self.cols * other.cols, self.nvars, entries)

    def kron_external(self, other: "PolyMatrix") -> "PolyMatrix":
        """R_m 행렬 ⊠ R_n 행렬: 두 번째 인자의 변수를 m 만큼 밀어 R_{m+n} 에서 곱합니다."""
        total = self.nvars + other.nvars
        return self.reindexed(0, total).kron(other.reindexed(self.nvars, total))

    def format_rows(self) -> List[List[str]]:
        return [[self.get(r, c).format() for c in range(self.cols)] for r in range(self.rows)]


def evaluate_at_matrices(p: Poly, action: Sequence[PolyMatrix]) -> PolyMatrix:
    """서로 가환인 행렬들 L_1..L_n 에 p 를 대입한 p(L_1, …, L_n)"""
    if len(action) != p.nvars:
        raise ValueError(f"대입할 행렬 개수가 변수 개수와 다릅니다: {len(action)} != {p.nvars}")
    size = action[0].rows if action else 1
    nvars = action[0].nvars if action else 0
    powers: Dict[Tuple[int, int], PolyMatrix] = {}

    def power(j: int, e: int) -> PolyMatrix:
        if (j, e) not in powers:
            powers[(j, e)] = action[j] if e == 1 else power(j, e - 1) @ action[j]
        return powers[(j, e)]

    result: Dict[Position, Poly] = {}
    for exp, coeff in p.items():
        term = None
        for j, e in enumerate(exp):
            if e:
                term = power(j, e) if term is None else term @ power(j, e)
        constant = Poly.constant(nvars, coeff)
        if term is None:
            for k in range(size):
                result[(k, k)] = result[(k, k)] + constant if (k, k) in result else constant
        else:
            for pos, value in term.entries.items():
                scaled = value * constant
                result[pos] = result[pos] + scaled if pos in result else scaled
    return PolyMatrix(size, size, nvars, result)


def block_diagonal(blocks: Iterable[PolyMatrix], nvars: int) -> PolyMatrix:
    entries: Dict[Position, Poly] = {}
    rows = cols = 0
    for block in blocks:
        for (r, c), value in block.entries.items():
            entries[(r + rows, c + cols)] = value
        rows += block.rows
        cols += block.cols
    return PolyMatrix(rows, cols, nvars, entries)
