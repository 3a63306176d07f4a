"""
쌍가군 사상과 Hom 공간

사상은 공역 계수 × 정의역 계수 크기의 다항식 행렬로, 오른쪽 선형이며
모든 변수에 대해 F·L^M_j = L^N_j·F 를 만족합니다.
차수 d 사상의 (r,c) 성분은 d + δ_M[c] − δ_N[r] 차 동차 다항식입니다.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Hashable, List, Optional, Sequence, Tuple, Union

from common.enums import BimoduleKind
from constants import VARIABLE_DEGREE

from .bimodule import Bimodule, tensor_k, tensor_R
from .linear_system import EquationCollector, Vector
from .poly import Exponent, Poly, monomials_of_degree
from .poly_matrix import PolyMatrix

logger = logging.getLogger(__name__)

@dataclass(frozen=True)
class BimoduleMap:
    """차수 degree 의 쌍가군 사상 source → target"""

    source: Bimodule
    target: Bimodule
    degree: int
    matrix: PolyMatrix

    def __post_init__(self):
        if self.source.strands != self.target.strands:
            raise ValueError(f"가닥 수가 다른 사상입니다: {self.source.strands} != {self.target.strands}")
        if self.matrix.shape != (self.target.rank, self.source.rank):
            raise ValueError(
                f"사상 행렬 모양이 잘못되었습니다: {self.matrix.shape}, "
                f"기대값 ({self.target.rank}, {self.source.rank})"
            )
        if self.matrix.nvars != self.source.strands:
            raise ValueError(f"사상 성분의 변수 개수가 다릅니다: {self.matrix.nvars}")

    @classmethod
    def identity(cls, module: Bimodule) -> "BimoduleMap":
        return cls(module, module, 0, PolyMatrix.identity(module.rank, module.strands))

    @classmethod
    def zero(cls, source: Bimodule, target: Bimodule, degree: int = 0) -> "BimoduleMap":
        return cls(source, target, degree, PolyMatrix.zeros(target.rank, source.rank, source.strands))

    @classmethod
    def from_rows(cls, source: Bimodule, target: Bimodule, rows, degree: int = 0) -> "BimoduleMap":
        return cls(source, target, degree, PolyMatrix.from_rows(rows, source.strands))

    @property
    def strands(self) -> int:
        return self.source.strands

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def is_valid(self) -> bool:
        return is_valid(self)

    def compose(self, other: "BimoduleMap") -> "BimoduleMap":
        """self ∘ other"""
        if not other.target.same_frame(self.source):
            raise ValueError("합성할 수 없는 사상입니다: 중간 쌍가군의 틀이 다릅니다")
        return BimoduleMap(other.source, self.target, self.degree + other.degree, self.matrix @ other.matrix)

    def _check_parallel(self, other: "BimoduleMap") -> None:
        if not (self.source.same_frame(other.source) and self.target.same_frame(other.target)):
            raise ValueError("정의역/공역이 다른 사상은 더할 수 없습니다")
        if self.degree != other.degree and not (self.is_zero() or other.is_zero()):
            raise ValueError(f"차수가 다른 사상은 더할 수 없습니다: {self.degree} != {other.degree}")

    def __add__(self, other: "BimoduleMap") -> "BimoduleMap":
        self._check_parallel(other)
        degree = other.degree if self.is_zero() else self.degree
        return BimoduleMap(self.source, self.target, degree, self.matrix + other.matrix)

    def __neg__(self) -> "BimoduleMap":
        return BimoduleMap(self.source, self.target, self.degree, -self.matrix)

    def __sub__(self, other: "BimoduleMap") -> "BimoduleMap":
        return self + (-other)

    def scale(self, factor: Union[int, Fraction]) -> "BimoduleMap":
        return BimoduleMap(self.source, self.target, self.degree, self.matrix.scale(factor))

    def reframed(self, source: Bimodule, target: Bimodule) -> "BimoduleMap":
        """같은 틀의 다른 정의역/공역 객체로 바꿔 붙입니다."""
        if not (source.same_frame(self.source) and target.same_frame(self.target)):
            raise ValueError("틀이 다른 쌍가군으로 바꿔 붙일 수 없습니다")
        return BimoduleMap(source, target, self.degree, self.matrix)

    def format_rows(self) -> List[List[str]]:
        return self.matrix.format_rows()


def compose(g: BimoduleMap, f: BimoduleMap) -> BimoduleMap:
    return g.compose(f)


def add(f: BimoduleMap, g: BimoduleMap) -> BimoduleMap:
    return f + g


def scale(c: Union[int, Fraction], f: BimoduleMap) -> BimoduleMap:
    return f.scale(c)


def is_valid(f: BimoduleMap) -> bool:
    """동차성과 왼쪽 작용 교환 조건을 정확히 검사합니다."""
    source, target = f.source, f.target
    for (r, c), value in f.matrix.entries.items():
        expected = f.degree + source.basis_degrees[c] - target.basis_degrees[r]
        if not value.is_homogeneous(expected):
            logger.debug("사상 성분 (%d,%d) 이 %d 차 동차가 아닙니다: %s", r, c, expected, value)
            return False
    for j, (left, right) in enumerate(zip(source.left_action, target.left_action), start=1):
        if f.matrix @ left != right @ f.matrix:
            logger.debug("사상이 x%d 의 왼쪽 작용과 교환하지 않습니다", j)
            return False
    return True


def tensor_R_maps(f: BimoduleMap, g: BimoduleMap) -> BimoduleMap:
    """f ⊗_R g: 블록 (k,a) = ev(F[k][a], L^{N'}) · G"""
    if f.strands != g.strands:
        raise ValueError(f"가닥 수가 다른 사상입니다: {f.strands} != {g.strands}")
    inner = g.target
    rows = f.target.rank * g.target.rank
    cols = f.source.rank * g.source.rank
    entries = {}
    for (k, a), p in f.matrix.entries.items():
        block = inner.left_multiplication(p) @ g.matrix
        for (l, b), value in block.entries.items():
            entries[(k * g.target.rank + l, a * g.source.rank + b)] = value
    return BimoduleMap(
        tensor_R(f.source, g.source),
        tensor_R(f.target, g.target),
        f.degree + g.degree,
        PolyMatrix(rows, cols, f.strands, entries),
    )


def tensor_k_maps(f: BimoduleMap, g: BimoduleMap) -> BimoduleMap:
    """f ⊠ g: 변수를 다시 번호 붙인 크로네커 곱"""
    return BimoduleMap(
        tensor_k(f.source, g.source),
        tensor_k(f.target, g.target),
        f.degree + g.degree,
        f.matrix.kron_external(g.matrix),
    )


def _frame_key(module: Bimodule) -> Optional[Hashable]:
    """Hom 캐시 키 (보트-사멜슨/순열 쌍가군만)"""
    if module.kind not in (BimoduleKind.BOTT_SAMELSON, BimoduleKind.PERMUTATION):
        return None
    twist = module.twist.images if module.twist is not None else None
    return (module.kind.name, module.strands, module.letters, twist, module.basis_degrees)


def _forced_total(source: Bimodule, target: Bimodule, degree: int, r: int, c: int) -> Optional[int]:
    """(r,c) 성분의 지수 합 (불가능하면 None)"""
    forced = degree + source.basis_degrees[c] - target.basis_degrees[r]
    if forced < 0 or forced % VARIABLE_DEGREE:
        return None
    return forced // VARIABLE_DEGREE


def _add_exponents(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def _intertwining_equations(
    source: Bimodule, target: Bimodule, unknowns: Sequence[Tuple[int, int, Exponent]]
) -> EquationCollector:
    """미지 성분 (r, c, 단항식) 에 대한 F·L^M_j − L^N_j·F = 0 방정식"""
    collector = EquationCollector(len(unknowns))
    for j in range(source.strands):
        by_row: Dict[int, List[Tuple[int, Poly]]] = {}
        for (k, c), p in source.left_action[j].entries.items():
            by_row.setdefault(k, []).append((c, p))
        by_col: Dict[int, List[Tuple[int, Poly]]] = {}
        for (r, k), p in target.left_action[j].entries.items():
            by_col.setdefault(k, []).append((r, p))
        for u, (r, k, exp) in enumerate(unknowns):
            for c, p in by_row.get(k, ()):
                for e, coef in p.items():
                    collector.add(("L", j, r, c, _add_exponents(exp, e)), u, coef)
            for r2, p in by_col.get(r, ()):
                for e, coef in p.items():
                    collector.add(("L", j, r2, k, _add_exponents(exp, e)), u, -coef)
    return collector


def _vector_to_matrix(
    vector: Vector, unknowns: Sequence[Tuple[int, int, Exponent]], rows: int, cols: int, nvars: int
) -> PolyMatrix:
    terms: Dict[Tuple[int, int], Dict[Exponent, Fraction]] = {}
    for u, value in vector.items():
        r, c, exp = unknowns[u]
        terms.setdefault((r, c), {})[exp] = value
    entries = {pos: Poly.from_terms(nvars, t) for pos, t in terms.items()}
    return PolyMatrix(rows, cols, nvars, entries)


def hom_basis(source: Bimodule, target: Bimodule, degree: int) -> Tuple[BimoduleMap, ...]:
    """차수 degree 사상 공간의 ℚ-기저 (결정적 순서)

    성분 차수가 동차성으로 정해지므로 유한 선형계를 정확히 풉니다.
    """
    if source.strands != target.strands:
        raise ValueError(f"가닥 수가 다른 쌍가군입니다: {source.strands} != {target.strands}")
    source_key, target_key = _frame_key(source), _frame_key(target)
    if source_key is None or target_key is None:
        return _solve_hom_basis(source, target, degree)
    basis = _framed_hom_basis(_Frame(source_key, source), _Frame(target_key, target), degree)
    return tuple(f.reframed(source, target) for f in basis)


@dataclass(frozen=True)
class _Frame:
    """틀 키로만 비교되는 쌍가군 (lru_cache 키)"""

    key: Hashable
    module: Bimodule = field(compare=False)


@lru_cache(maxsize=None)
def _framed_hom_basis(source: _Frame, target: _Frame, degree: int) -> Tuple[BimoduleMap, ...]:
    return _solve_hom_basis(source.module, target.module, degree)


def _solve_hom_basis(source: Bimodule, target: Bimodule, degree: int) -> Tuple[BimoduleMap, ...]:
    unknowns: List[Tuple[int, int, Exponent]] = []
    for r in range(target.rank):
        for c in range(source.rank):
            total = _forced_total(source, target, degree, r, c)
            if total is None:
                continue
            unknowns.extend((r, c, exp) for exp in monomials_of_degree(source.strands, total))
    if not unknowns:
        basis: Tuple[BimoduleMap, ...] = ()
    else:
        collector = _intertwining_equations(source, target, unknowns)
        basis = tuple(
            BimoduleMap(
                source,
                target,
                degree,
                _vector_to_matrix(vector, unknowns, target.rank, source.rank, source.strands),
            )
            for vector in collector.nullspace()
        )
    logger.debug(
        "Hom 풀이: 계수 %d → %d, 차수 %d, 미지수 %d, 차원 %d",
        source.rank,
        target.rank,
        degree,
        len(unknowns),
        len(basis),
    )
    return basis


def hom_dimension(source: Bimodule, target: Bimodule, degree: int) -> int:
    return len(hom_basis(source, target, degree))


def hom_dimension_bruteforce(source: Bimodule, target: Bimodule, degree: int, bound_factor: int = 2) -> int:
    """동차성을 미지수 제한 대신 방정식으로 거는 독립 풀이

    각 성분에 지수 합 bound_factor·(최대 강제 차수) + 1 이하의 모든 단항식을 두고,
    강제 차수와 다른 단항식 계수는 0 이라는 방정식을 덧붙입니다.
    """
    totals = [
        _forced_total(source, target, degree, r, c)
        for r in range(target.rank)
        for c in range(source.rank)
    ]
    bound = bound_factor * max([t for t in totals if t is not None] or [0]) + 1
    unknowns: List[Tuple[int, int, Exponent]] = []
    off_degree: List[int] = []
    for r in range(target.rank):
        for c in range(source.rank):
            total = totals[r * source.rank + c]
            for s in range(bound + 1):
                for exp in monomials_of_degree(source.strands, s):
                    if s != total:
                        off_degree.append(len(unknowns))
                    unknowns.append((r, c, exp))
    if not unknowns:
        return 0
    collector = _intertwining_equations(source, target, unknowns)
    for u in off_degree:
        collector.add(("H", u), u, 1)
    return len(collector.nullspace())


def hom_cache_info():
    return _framed_hom_basis.cache_info()


def clear_hom_cache() -> None:
    _framed_hom_basis.cache_clear()
