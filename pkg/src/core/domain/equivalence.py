"""
호모토피 동치 탐색과 증인

HomotopyEquivalence 는 (f, g, h, k) 증인을 담습니다.

    g∘f − id_C = d h + h d,   f∘g − id_D = d k + k d

탐색 순서:
    1. 글자 그대로 같은 복합체 → 항등
    2. 먼 글자 교환으로 맞춘 재배열 동형 (h = k = 0)
    3. 호모토피류 대표원의 정수 격자 조합 f 마다 (g, h, k) 를 선형으로 풂
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from constants import (
    DEFAULT_LATTICE_BOUND,
    LATTICE_COEFFICIENT_ORDER,
    REASON_NOT_FOUND_WITHIN_LATTICE,
    REASON_OK,
    REASON_WITNESS_REJECTED,
    RELABEL_LATTICE_BOUND,
)

from .complex import (
    BlockMatrix,
    ChainMap,
    Complex,
    GradedMap,
    Homotopy,
    Summand,
    boundary,
    identity_map,
    is_chain_map,
    tensor_graded_maps,
)
from .homotopy import MapSpace, Slot, add_chain_conditions, emit, emit_map_constant, homotopy_class_space
from .linear_system import EquationCollector, Vector, determinant, inverse_matrix
from .morphism import BimoduleMap
from .poly import Poly
from .poly_matrix import PolyMatrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class HomotopyEquivalence:
    """C ≃ D 의 정확한 증인"""

    source: Complex
    target: Complex
    forward: GradedMap
    backward: GradedMap
    source_homotopy: GradedMap
    target_homotopy: GradedMap

    @classmethod
    def identity(cls, complex_: Complex) -> "HomotopyEquivalence":
        identity = identity_map(complex_)
        return cls(
            complex_, complex_, identity, identity, Homotopy.zero(complex_, complex_), Homotopy.zero(complex_, complex_)
        )

    def verify(self) -> bool:
        """사슬 사상 조건과 두 호모토피 방정식을 독립적으로 다시 계산합니다."""
        f, g = self.forward, self.backward
        if not (is_chain_map(f) and is_chain_map(g)):
            logger.debug("증인이 사슬 사상이 아닙니다")
            return False
        if g.compose(f) - identity_map(self.source) != boundary(self.source_homotopy):
            logger.debug("g∘f − id 가 [d, h] 와 다릅니다")
            return False
        if f.compose(g) - identity_map(self.target) != boundary(self.target_homotopy):
            logger.debug("f∘g − id 가 [d, k] 와 다릅니다")
            return False
        return True

    def inverse(self) -> "HomotopyEquivalence":
        return HomotopyEquivalence(
            self.target, self.source, self.backward, self.forward, self.target_homotopy, self.source_homotopy
        )

    def then(self, other: "HomotopyEquivalence") -> "HomotopyEquivalence":
        """self: C → D 다음 other: D → E

        h = g1 h2 f1 + h1,  k = f2 k1 g2 + k2
        """
        f1, g1, h1, k1 = self.forward, self.backward, self.source_homotopy, self.target_homotopy
        f2, g2, h2, k2 = other.forward, other.backward, other.source_homotopy, other.target_homotopy
        return HomotopyEquivalence(
            self.source,
            other.target,
            f2.compose(f1),
            g1.compose(g2),
            g1.compose(h2.compose(f1)) + h1,
            f2.compose(k1.compose(g2)) + k2,
        )

    def _apply(self, transform) -> "HomotopyEquivalence":
        f = transform(self.forward)
        g = transform(self.backward)
        return HomotopyEquivalence(
            f.source, f.target, f, g, transform(self.source_homotopy), transform(self.target_homotopy)
        )

    def star_left(self, other: Complex) -> "HomotopyEquivalence":
        """id_X ⋆ e"""
        identity = identity_map(other)
        return self._apply(lambda m: tensor_graded_maps(identity, m, external=False))

    def star_right(self, other: Complex) -> "HomotopyEquivalence":
        """e ⋆ id_X"""
        identity = identity_map(other)
        return self._apply(lambda m: tensor_graded_maps(m, identity, external=False))

    def embedded(self, before: int, after: int) -> "HomotopyEquivalence":
        """1_before ⊠ e ⊠ 1_after"""
        result = self
        if before:
            left = identity_map(Complex.unit(before))
            result = result._apply(lambda m: tensor_graded_maps(left, m, external=True))
        if after:
            right = identity_map(Complex.unit(after))
            result = result._apply(lambda m: tensor_graded_maps(m, right, external=True))
        return result

    def shifted(self, amount: int) -> "HomotopyEquivalence":
        return self._apply(lambda m: m.shifted(amount))

    def witness_sizes(self) -> Dict[str, int]:
        """성분 블록 수 (보고서용)"""
        return {
            name: sum(len(block.entries) for block in m.components.values())
            for name, m in (
                ("f", self.forward),
                ("g", self.backward),
                ("h", self.source_homotopy),
                ("k", self.target_homotopy),
            )
        }


@dataclass(frozen=True, eq=False)
class EquivalenceSearch:
    """탐색 결과 (실패는 '격자 안에서 찾지 못함' 으로만 보고)"""

    equivalence: Optional[HomotopyEquivalence]
    reason: str
    method: str
    candidates_tried: int = 0
    lattice: Tuple[int, ...] = ()
    class_dimension: Optional[int] = None
    details: Dict[str, int] = field(default_factory=dict)

    @property
    def found(self) -> bool:
        return self.equivalence is not None


def lattice_points(dimension: int, bound: int, include_zero: bool = False) -> Iterator[Tuple[int, ...]]:
    """계수 |c| ≤ bound 인 정수 벡터를 L1 노름 순으로 (같은 노름 안에서는 계수 순서표 순)"""
    values = [c for c in LATTICE_COEFFICIENT_ORDER if abs(c) <= bound]

    def compositions(length: int, remaining: int) -> Iterator[Tuple[int, ...]]:
        if length == 0:
            if remaining == 0:
                yield ()
            return
        for c in values:
            if abs(c) <= remaining:
                for rest in compositions(length - 1, remaining - abs(c)):
                    yield (c,) + rest

    start = 0 if include_zero else 1
    for norm in range(start, bound * dimension + 1):
        yield from compositions(dimension, norm)


def _identity_between(source: Complex, target: Complex) -> HomotopyEquivalence:
    """same_as 인 두 복합체 사이의 항등 동치"""
    forward = ChainMap(
        source,
        target,
        {k: BlockMatrix.identity(source.at(k)).relabeled(target.at(k), source.at(k)) for k in source.degrees()},
    )
    backward = ChainMap(
        target,
        source,
        {k: BlockMatrix.identity(target.at(k)).relabeled(source.at(k), target.at(k)) for k in target.degrees()},
    )
    return HomotopyEquivalence(
        source, target, forward, backward, Homotopy.zero(source, source), Homotopy.zero(target, target)
    )


# 재배열 동형
def commutation_normal_form(letters: Sequence[int]) -> Tuple[int, ...]:
    """먼 글자 교환 (|i − j| ≥ 2) 동치류의 사전순 최소 대표

    남은 글자 중 앞선 모든 글자와 교환 가능한 것 가운데 가장 작은 글자를 차례로 고릅니다.
    """
    remaining = list(letters)
    result = []
    while remaining:
        best = None
        for p, i in enumerate(remaining):
            if all(abs(i - j) >= 2 for j in remaining[:p]) and (best is None or i < remaining[best]):
                best = p
        result.append(remaining.pop(best))
    return tuple(result)


def _positions_to_normal_form(letters: Sequence[int]) -> List[int]:
    """letters 의 위치 p 가 정규형에서 놓이는 위치 (같은 글자는 나타난 순서대로 짝지음)"""
    normal = commutation_normal_form(letters)
    slots: Dict[int, List[int]] = {}
    for q, i in enumerate(normal):
        slots.setdefault(i, []).append(q)
    used: Dict[int, int] = {}
    mapping = []
    for i in letters:
        t = used.get(i, 0)
        mapping.append(slots[i][t])
        used[i] = t + 1
    return mapping


def _bit_permutation(source: Sequence[int], target: Sequence[int], strands: int) -> PolyMatrix:
    """B_source → B_target 의 기저 비트 재배열 행렬 (가장 왼쪽 글자가 최상위 비트)"""
    length = len(source)
    to_normal_source = _positions_to_normal_form(source)
    to_normal_target = _positions_to_normal_form(target)
    from_normal_target = {q: p for p, q in enumerate(to_normal_target)}
    moved = [from_normal_target[to_normal_source[p]] for p in range(length)]
    entries = {}
    for index in range(2 ** length):
        image = 0
        for p in range(length):
            if index >> (length - 1 - p) & 1:
                image |= 1 << (length - 1 - moved[p])
        entries[(image, index)] = 1
    return PolyMatrix(2 ** length, 2 ** length, strands, {pos: Poly.constant(strands, v) for pos, v in entries.items()})


def _relabel_key(summand: Summand) -> Tuple:
    twist = summand.permutation.images if summand.permutation is not None else None
    return (commutation_normal_form(summand.letters), summand.shift, twist)


def _relabel_map(a: Summand, b: Summand) -> BimoduleMap:
    matrix = _bit_permutation(a.letters, b.letters, a.strands)
    return BimoduleMap(a.module(), b.module(), 0, matrix)


def find_relabeling_isomorphism(
    source: Complex, target: Complex, bound: int = RELABEL_LATTICE_BOUND
) -> Optional[HomotopyEquivalence]:
    """같은 꼬리표(교환 정규형, 이동, 순열)끼리 스칼라 배 비트 재배열로 잇는 사슬 동형

    그룹마다 행렬 Λ 가 가역이도록 해 공간의 격자 조합을 고르고, 역은 Λ^-1 로 만듭니다.
    """
    if source.strands != target.strands or source.degrees() != target.degrees():
        return None
    slots: List[Slot] = []
    groups: Dict[Tuple[int, Tuple], Tuple[List[int], List[int]]] = {}
    for k in source.degrees():
        source_keys = sorted(_relabel_key(s) for s in source.at(k))
        target_keys = sorted(_relabel_key(s) for s in target.at(k))
        if source_keys != target_keys:
            return None
        for c, a in enumerate(source.at(k)):
            key = _relabel_key(a)
            group = groups.setdefault((k, key), ([], []))
            group[0].append(c)
            for r, b in enumerate(target.at(k)):
                if _relabel_key(b) == key:
                    slots.append(Slot(k, r, c, _relabel_map(a, b)))
        for r, b in enumerate(target.at(k)):
            groups[(k, _relabel_key(b))][1].append(r)
    space = MapSpace(source, target, 0, slots)
    collector = EquationCollector(len(space))
    add_chain_conditions(collector, space, "R")
    basis = collector.nullspace()
    if not basis:
        return None
    slot_index = {(s.degree, s.row, s.col): u for u, s in enumerate(slots)}

    for coefficients in lattice_points(len(basis), bound):
        vector: Vector = {}
        for c, v in zip(coefficients, basis):
            if c:
                for u, value in v.items():
                    vector[u] = vector.get(u, Fraction(0)) + c * value
        matrices = {}
        for (k, key), (cols, rows) in groups.items():
            lam = [[vector.get(slot_index[(k, r, c)], Fraction(0)) for c in cols] for r in rows]
            if determinant(lam) == 0:
                break
            matrices[(k, key)] = lam
        else:
            forward = space.assemble(vector)
            backward = _inverse_relabel(source, target, groups, matrices)
            equivalence = HomotopyEquivalence(
                source, target, forward, backward, Homotopy.zero(source, source), Homotopy.zero(target, target)
            )
            if equivalence.verify():
                logger.info("재배열 동형을 찾았습니다 (격자 계수 %s)", coefficients)
                return equivalence
            logger.warning("재배열 동형 후보가 검증을 통과하지 못했습니다: %s", coefficients)
    return None


def _inverse_relabel(source: Complex, target: Complex, groups, matrices) -> ChainMap:
    blocks: Dict[int, Dict[Tuple[int, int], BimoduleMap]] = {}
    for (k, key), (cols, rows) in groups.items():
        inverse = inverse_matrix(matrices[(k, key)])
        for i, c in enumerate(cols):
            for j, r in enumerate(rows):
                value = inverse[i][j]
                if value:
                    piece = _relabel_map(target.at(k)[r], source.at(k)[c]).scale(value)
                    blocks.setdefault(k, {})[(c, r)] = piece
    components = {k: BlockMatrix(source.at(k), target.at(k), bucket) for k, bucket in blocks.items()}
    return ChainMap(target, source, components)


# 격자 탐색
def solve_inverse_data(forward: GradedMap) -> Optional[HomotopyEquivalence]:
    """주어진 사슬 사상 f 에 대해 (g, h, k) 를 하나의 선형계로 풉니다."""
    source, target = forward.source, forward.target
    g_space = MapSpace(target, source, 0)
    h_space = MapSpace(source, source, -1)
    k_space = MapSpace(target, target, -1)
    h_offset = len(g_space)
    k_offset = h_offset + len(h_space)
    collector = EquationCollector(k_offset + len(k_space))

    add_chain_conditions(collector, g_space, "g")
    for u, slot in enumerate(g_space.slots):
        k, r, c, phi = slot.degree, slot.row, slot.col, slot.basis
        for (c2, c1), f in forward.component(k).entries.items():
            if c2 == c:
                emit(collector, "h", k, r, c1, phi.compose(f), u)
        for (r2, r1), f in forward.component(k).entries.items():
            if r1 == r:
                emit(collector, "k", k, r2, c, f.compose(phi), u)
    for u in range(len(h_space)):
        for k, r, c, piece in h_space.commutator_terms(u):
            emit(collector, "h", k, r, c, piece, h_offset + u, -1)
    for u in range(len(k_space)):
        for k, r, c, piece in k_space.commutator_terms(u):
            emit(collector, "k", k, r, c, piece, k_offset + u, -1)
    emit_map_constant(collector, "h", identity_map(source))
    emit_map_constant(collector, "k", identity_map(target))

    solution = collector.solve()
    if solution is None:
        return None
    return HomotopyEquivalence(
        source,
        target,
        forward,
        g_space.assemble(solution, 0),
        h_space.assemble(solution, h_offset),
        k_space.assemble(solution, k_offset),
    )


def find_homotopy_equivalence(
    source: Complex, target: Complex, lattice_bound: int = DEFAULT_LATTICE_BOUND
) -> EquivalenceSearch:
    """C ≃ D 의 증인을 찾습니다. 찾은 증인은 모두 독립적으로 재검증합니다."""
    if source.same_as(target):
        return EquivalenceSearch(_identity_between(source, target), REASON_OK, "identity")
    relabel = find_relabeling_isomorphism(source, target)
    if relabel is not None:
        return EquivalenceSearch(relabel, REASON_OK, "relabel")

    classes = homotopy_class_space(source, target)
    representatives = classes.representatives
    tried = 0
    rejected = False
    if representatives:
        for coefficients in lattice_points(len(representatives), lattice_bound):
            tried += 1
            forward: GradedMap = ChainMap.zero(source, target)
            for c, rep in zip(coefficients, representatives):
                if c:
                    forward = forward + rep.scale(c)
            candidate = solve_inverse_data(forward)
            if candidate is None:
                continue
            if candidate.verify():
                logger.info("호모토피 동치를 찾았습니다: 계수 %s (후보 %d 번째)", coefficients, tried)
                return EquivalenceSearch(
                    candidate, REASON_OK, "lattice", tried, coefficients, classes.dimension, candidate.witness_sizes()
                )
            rejected = True
            logger.warning("격자 후보 %s 의 증인이 검증을 통과하지 못했습니다", coefficients)
    reason = REASON_WITNESS_REJECTED if rejected else REASON_NOT_FOUND_WITHIN_LATTICE
    logger.info("격자 |c| ≤ %d 안에서 호모토피 동치를 찾지 못했습니다 (후보 %d)", lattice_bound, tried)
    return EquivalenceSearch(None, reason, "lattice", tried, (), classes.dimension)


def chain_equivalence(source: Complex, target: Complex, lattice_bound: int = DEFAULT_LATTICE_BOUND) -> HomotopyEquivalence:
    """find_homotopy_equivalence 의 결과를 돌려주고, 없으면 LookupError"""
    search = find_homotopy_equivalence(source, target, lattice_bound)
    if search.equivalence is None:
        raise LookupError(f"호모토피 동치를 찾지 못했습니다: {search.reason}")
    return search.equivalence
