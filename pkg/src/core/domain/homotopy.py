"""
호모토피 선형대수

복합체 사이 사상의 미지수는 합성분 쌍마다 Hom 기저 원소의 계수입니다.
사슬 조건, 영호모토피 방정식 [d, h] = f, 호모토피류 공간 모두
다항식 계수별로 펼친 ℚ-선형계로 풉니다.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Hashable, Iterator, List, Optional, Tuple

from .complex import BlockMatrix, ChainMap, Complex, GradedMap, Homotopy, boundary, graded_map, is_chain_map
from .linear_system import EquationCollector, Vector, rank_of_columns
from .morphism import BimoduleMap, hom_basis

logger = logging.getLogger(__name__)

RawKey = Tuple[Hashable, ...]


@dataclass(frozen=True)
class Slot:
    """미지수 하나: k 차 성분의 (행, 열) 블록에 놓인 Hom 기저 원소"""

    degree: int
    row: int
    col: int
    basis: BimoduleMap


class MapSpace:
    """C → D, 호몰로지 차수 shift 인 사상들의 좌표계"""

    def __init__(self, source: Complex, target: Complex, shift: int, slots: Optional[List[Slot]] = None):
        self.source = source
        self.target = target
        self.shift = shift
        self.slots: List[Slot] = []
        if slots is not None:
            self.slots = list(slots)
            return
        for k in source.degrees():
            for c, s in enumerate(source.at(k)):
                for r, t in enumerate(target.at(k + shift)):
                    for basis in hom_basis(s.module(), t.module(), 0):
                        self.slots.append(Slot(k, r, c, basis))
        logger.debug("사상 공간 (호몰로지 차수 %d): 미지수 %d", shift, len(self.slots))

    def __len__(self) -> int:
        return len(self.slots)

    def assemble(self, vector: Vector, offset: int = 0) -> GradedMap:
        """계수 벡터 (미지수 번호 offset 부터) 를 사상으로"""
        blocks: Dict[int, Dict[Tuple[int, int], BimoduleMap]] = {}
        for u, slot in enumerate(self.slots):
            value = vector.get(offset + u)
            if not value:
                continue
            piece = slot.basis.scale(value)
            bucket = blocks.setdefault(slot.degree, {})
            pos = (slot.row, slot.col)
            bucket[pos] = bucket[pos] + piece if pos in bucket else piece
        components = {
            k: BlockMatrix(self.target.at(k + self.shift), self.source.at(k), bucket) for k, bucket in blocks.items()
        }
        return graded_map(self.source, self.target, components, self.shift)

    def commutator_terms(self, u: int) -> Iterator[Tuple[int, int, int, BimoduleMap]]:
        """[d, φ_u] = d_D φ_u − (−1)^shift φ_u d_C 의 블록별 기여 (k, 행, 열, 사상)"""
        slot = self.slots[u]
        k, r, c, phi = slot.degree, slot.row, slot.col, slot.basis
        for (r2, r1), d in self.target.d(k + self.shift).entries.items():
            if r1 == r:
                yield k, r2, c, d.compose(phi)
        sign = 1 if self.shift % 2 else -1
        for (c1, c0), d in self.source.d(k - 1).entries.items():
            if c1 == c:
                piece = phi.compose(d)
                yield k - 1, r, c0, piece if sign > 0 else -piece


def emit(collector: EquationCollector, group: Hashable, k: int, r: int, c: int, f: BimoduleMap, unknown: int, factor=1) -> None:
    """사상 f 의 다항식 계수들을 미지수 unknown 의 계수로 방정식에 더합니다."""
    for (row, col), p in f.matrix.entries.items():
        for exp, coef in p.items():
            collector.add((group, k, r, c, row, col, exp), unknown, coef * factor if factor != 1 else coef)


def emit_constant(collector: EquationCollector, group: Hashable, k: int, r: int, c: int, f: BimoduleMap, factor=1) -> None:
    """사상 f 를 우변에 더합니다."""
    for (row, col), p in f.matrix.entries.items():
        for exp, coef in p.items():
            collector.add_constant((group, k, r, c, row, col, exp), coef * factor if factor != 1 else coef)


def emit_map_constant(collector: EquationCollector, group: Hashable, g: GradedMap, factor=1) -> None:
    for k, block in g.components.items():
        for (r, c), f in block.entries.items():
            emit_constant(collector, group, k, r, c, f, factor)


def raw_vector(g: GradedMap) -> Dict[RawKey, Fraction]:
    """사상을 (k, 행, 열, 성분행, 성분열, 지수) 좌표의 유리수 벡터로"""
    vector: Dict[RawKey, Fraction] = {}
    for k, block in g.components.items():
        for (r, c), f in block.entries.items():
            for (row, col), p in f.matrix.entries.items():
                for exp, coef in p.terms().items():
                    vector[(k, r, c, row, col, exp)] = coef
    return vector


def add_chain_conditions(collector: EquationCollector, space: MapSpace, group: Hashable, offset: int = 0) -> None:
    """[d, F] = 0 (space 의 미지수가 offset 부터)"""
    for u in range(len(space)):
        for k, r, c, piece in space.commutator_terms(u):
            emit(collector, group, k, r, c, piece, offset + u)


def chain_map_basis(source: Complex, target: Complex) -> List[ChainMap]:
    """차수 0 사슬 사상 공간의 기저"""
    space = MapSpace(source, target, 0)
    if not space.slots:
        return []
    collector = EquationCollector(len(space))
    add_chain_conditions(collector, space, "Z")
    return [space.assemble(vector) for vector in collector.nullspace()]


def null_homotopy(f: GradedMap) -> Optional[Homotopy]:
    """d h + h d = f 인 h 를 정확히 풉니다. 없으면 None.

    Raises:
        ValueError: f 의 호몰로지 차수가 0 이 아니면
    """
    if f.degree != 0:
        raise ValueError("영호모토피는 차수 0 사상에 대해서만 찾습니다")
    if f.is_zero():
        return Homotopy.zero(f.source, f.target)
    space = MapSpace(f.source, f.target, -1)
    collector = EquationCollector(len(space))
    add_chain_conditions(collector, space, "N")
    emit_map_constant(collector, "N", f)
    solution = collector.solve()
    if solution is None:
        return None
    h = space.assemble(solution)
    if boundary(h) != f:
        logger.warning("영호모토피 해가 검증을 통과하지 못했습니다")
        return None
    return h


@dataclass(frozen=True)
class HomotopyClassSpace:
    """차수 0 사슬 사상 / 영호모토픽 사상"""

    dimension: int
    representatives: Tuple[ChainMap, ...]
    chain_map_dimension: int
    null_homotopic_dimension: int


def homotopy_class_space(source: Complex, target: Complex) -> HomotopyClassSpace:
    """사슬 사상 기저를 영호모토픽 부분공간으로 나눈 몫의 차원과 대표원

    [N | Z] 를 함께 소거했을 때 Z 쪽 피벗 열이 대표원입니다.
    """
    chain_maps = chain_map_basis(source, target)
    homotopies = MapSpace(source, target, -1)
    null_columns: List[Dict[RawKey, Fraction]] = []
    for u in range(len(homotopies)):
        column: Dict[RawKey, Fraction] = {}
        for k, r, c, piece in homotopies.commutator_terms(u):
            for (row, col), p in piece.matrix.entries.items():
                for exp, coef in p.terms().items():
                    key = (k, r, c, row, col, exp)
                    column[key] = column.get(key, Fraction(0)) + coef
        null_columns.append(column)
    chain_columns = [raw_vector(f) for f in chain_maps]
    null_rank, _ = rank_of_columns(null_columns)
    _, pivots = rank_of_columns(null_columns + chain_columns)
    representatives = tuple(chain_maps[p - len(null_columns)] for p in pivots if p >= len(null_columns))
    logger.info(
        "호모토피류 공간: 사슬 사상 %d, 영호모토픽 %d, 몫 %d",
        len(chain_maps),
        null_rank,
        len(representatives),
    )
    return HomotopyClassSpace(len(representatives), representatives, len(chain_maps), null_rank)


def homotopic_multiple(f: GradedMap, g: GradedMap) -> Optional[Tuple[Fraction, Homotopy]]:
    """f − c·g = [d, h] 인 (c, h). 없으면 None.

    g 가 영호모토픽이면 c 는 정해지지 않고 0 으로 돌아옵니다.
    """
    if f.degree != 0 or g.degree != 0:
        raise ValueError("차수 0 사상끼리만 비교합니다")
    space = MapSpace(f.source, f.target, -1)
    collector = EquationCollector(1 + len(space))
    for k, block in g.components.items():
        for (r, c), piece in block.entries.items():
            emit(collector, "C", k, r, c, piece, 0)
    add_chain_conditions(collector, space, "C", offset=1)
    emit_map_constant(collector, "C", f)
    solution = collector.solve()
    if solution is None:
        return None
    scalar = solution.get(0, Fraction(0))
    h = space.assemble(solution, 1)
    if f - g.scale(scalar) != boundary(h):
        logger.warning("스칼라 비교 해가 검증을 통과하지 못했습니다")
        return None
    return scalar, h


def is_null_homotopic(f: GradedMap) -> bool:
    return null_homotopy(f) is not None


def verify_null_homotopy(f: GradedMap, h: GradedMap) -> bool:
    return h.degree == -1 and boundary(h) == f


__all__ = [
    "HomotopyClassSpace",
    "MapSpace",
    "Slot",
    "add_chain_conditions",
    "chain_map_basis",
    "emit",
    "emit_constant",
    "emit_map_constant",
    "homotopic_multiple",
    "homotopy_class_space",
    "is_chain_map",
    "is_null_homotopic",
    "null_homotopy",
    "raw_vector",
    "verify_null_homotopy",
]
