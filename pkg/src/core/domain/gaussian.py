"""
가우스 소거

1. 미리 나누기: 단어에 인접한 같은 글자 P·i·i·S 가 있으면
   B_iB_i ≅ B_i⟨1⟩ ⊕ B_i⟨−1⟩ 로 P·i·S⟨+1⟩ (index +(0,)) 와 P·i·S⟨−1⟩ (index +(1,)) 로 바꿉니다.
2. 소거: 같은 꼬리표 사이의 0 아닌 스칼라 항등 성분 φ = λ·id 를 지웁니다.
   가장 낮은 호몰로지 차수부터, 같은 차수에서는 (열, 행) 순입니다.

    C^k = b ⊕ X,  C^{k+1} = a ⊕ Y,  d^k = [[φ, δ], [γ, ε]]
    ⇒  d'^k = ε − γ φ^-1 δ

증인 f = [0, 1] / [−γφ^-1, 1], g = [−φ^-1 δ; 1] / [0; 1], h(a → b) = −φ^-1, k = 0.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .bimodule import realize
from .complex import BlockMatrix, ChainMap, Complex, Homotopy, Summand
from .equivalence import HomotopyEquivalence
from .generators import idempotent_split_BiBi
from .morphism import BimoduleMap, tensor_R_maps
from .words import BSWord

logger = logging.getLogger(__name__)

Position = Tuple[int, int]


@dataclass(frozen=True, eq=False)
class GaussianResult:
    """소거 결과와 C ≃ C_reduced 증인"""

    reduced: Complex
    equivalence: HomotopyEquivalence
    splits: int
    cancellations: int


def _first_repeat(letters: Tuple[int, ...]) -> Optional[int]:
    for p in range(len(letters) - 1):
        if letters[p] == letters[p + 1]:
            return p
    return None


def _embedded_piece(letters: Tuple[int, ...], p: int, strands: int, middle: BimoduleMap) -> BimoduleMap:
    """id_P ⊗ middle ⊗ id_S (P = letters[:p], S = letters[p+2:])"""
    prefix = BimoduleMap.identity(realize(BSWord(strands, letters[:p])))
    suffix = BimoduleMap.identity(realize(BSWord(strands, letters[p + 2 :])))
    return tensor_R_maps(tensor_R_maps(prefix, middle), suffix)


def _split_once(complex_: Complex) -> Optional[HomotopyEquivalence]:
    """인접 반복 글자가 있는 합성분 하나를 B_i⟨±1⟩ 두 개로 나눕니다."""
    target_objects: Dict[int, List[Summand]] = {}
    projections: Dict[int, Dict[Position, BimoduleMap]] = {}
    inclusions: Dict[int, Dict[Position, BimoduleMap]] = {}
    done = False
    for k in complex_.degrees():
        row = []
        projection: Dict[Position, BimoduleMap] = {}
        inclusion: Dict[Position, BimoduleMap] = {}
        for c, s in enumerate(complex_.at(k)):
            p = None if done else _first_repeat(s.letters)
            if p is None:
                projection[(len(row), c)] = BimoduleMap.identity(s.module())
                inclusion[(c, len(row))] = BimoduleMap.identity(s.module())
                row.append(s)
                continue
            done = True
            i = s.letters[p]
            reduced_letters = s.letters[:p] + s.letters[p + 1 :]
            pieces = idempotent_split_BiBi(i, s.strands)
            for amount, suffix, include, project in (
                (1, (0,), pieces.include_plus, pieces.project_plus),
                (-1, (1,), pieces.include_minus, pieces.project_minus),
            ):
                part = Summand(s.strands, reduced_letters, s.shift + amount, None, s.index + suffix)
                project_full = _embedded_piece(s.letters, p, s.strands, project)
                include_full = _embedded_piece(s.letters, p, s.strands, include)
                projection[(len(row), c)] = BimoduleMap(s.module(), part.module(), 0, project_full.matrix)
                inclusion[(c, len(row))] = BimoduleMap(part.module(), s.module(), 0, include_full.matrix)
                row.append(part)
        target_objects[k] = row
        projections[k] = projection
        inclusions[k] = inclusion
    if not done:
        return None
    source = complex_
    project_blocks = {k: BlockMatrix(tuple(target_objects[k]), source.at(k), projections[k]) for k in source.degrees()}
    include_blocks = {k: BlockMatrix(source.at(k), tuple(target_objects[k]), inclusions[k]) for k in source.degrees()}
    differential = {
        k: project_blocks[k + 1] @ block @ include_blocks[k]
        for k, block in source.differential.items()
    }
    target = Complex(source.strands, {k: tuple(v) for k, v in target_objects.items()}, differential)
    forward = ChainMap(source, target, project_blocks)
    backward = ChainMap(target, source, include_blocks)
    return HomotopyEquivalence(source, target, forward, backward, Homotopy.zero(source, source), Homotopy.zero(target, target))


def _scalar_identity(f: BimoduleMap, a: Summand, b: Summand) -> Optional[Fraction]:
    """f 가 같은 꼬리표 사이의 λ·id (λ ≠ 0) 이면 λ"""
    if a.tag != b.tag or f.matrix.rows != f.matrix.cols:
        return None
    if len(f.matrix.entries) != f.matrix.rows:
        return None
    values = set()
    for (r, c), p in f.matrix.entries.items():
        if r != c or not p.is_constant():
            return None
        values.add(p.constant_value())
    if len(values) != 1:
        return None
    value = values.pop()
    return value if value != 0 else None


def find_cancellable(complex_: Complex) -> Optional[Tuple[int, int, int, Fraction]]:
    """(k, 열 c, 행 r, λ): 가장 낮은 차수, 그 안에서 (열, 행) 순"""
    for k in sorted(complex_.differential):
        block = complex_.differential[k]
        for (r, c) in sorted(block.entries, key=lambda pos: (pos[1], pos[0])):
            value = _scalar_identity(block.entries[(r, c)], block.cols[c], block.rows[r])
            if value is not None:
                return k, c, r, value
    return None


def _reframed_scaled(f: BimoduleMap, source: Summand, target: Summand, factor: Fraction) -> BimoduleMap:
    return BimoduleMap(source.module(), target.module(), f.degree, f.matrix.scale(factor))


def cancel(complex_: Complex, k: int, c: int, r: int, value: Fraction) -> HomotopyEquivalence:
    """d^k 의 (r, c) 성분 φ = value·id 를 지운 복합체와 증인"""
    inverse = Fraction(1) / value
    old_k, old_next = complex_.at(k), complex_.at(k + 1)
    b, a = old_k[c], old_next[r]
    keep_k = [p for p in range(len(old_k)) if p != c]
    keep_next = [p for p in range(len(old_next)) if p != r]
    new_k = {old: new for new, old in enumerate(keep_k)}
    new_next = {old: new for new, old in enumerate(keep_next)}
    objects = dict(complex_.objects)
    objects[k] = tuple(old_k[p] for p in keep_k)
    objects[k + 1] = tuple(old_next[p] for p in keep_next)
    objects = {deg: v for deg, v in objects.items() if v}

    d = complex_.d(k)
    gamma = {r2: f for (r2, c2), f in d.entries.items() if c2 == c and r2 != r}
    delta = {c2: f for (r2, c2), f in d.entries.items() if r2 == r and c2 != c}

    differential: Dict[int, BlockMatrix] = {}
    for deg, block in complex_.differential.items():
        rows, cols = objects.get(deg + 1, ()), objects.get(deg, ())
        entries: Dict[Position, BimoduleMap] = {}
        if deg == k - 1:
            entries = {(new_k[r2], c2): f for (r2, c2), f in block.entries.items() if r2 != c}
        elif deg == k:
            for (r2, c2), f in block.entries.items():
                if r2 != r and c2 != c:
                    entries[(new_next[r2], new_k[c2])] = f
            for r2, g in gamma.items():
                for c2, e in delta.items():
                    piece = g.compose(e).scale(-inverse).reframed(old_k[c2].module(), old_next[r2].module())
                    pos = (new_next[r2], new_k[c2])
                    entries[pos] = entries[pos] + piece if pos in entries else piece
        elif deg == k + 1:
            entries = {(r2, new_next[c2]): f for (r2, c2), f in block.entries.items() if c2 != r}
        else:
            entries = dict(block.entries)
        if rows and cols:
            differential[deg] = BlockMatrix(rows, cols, entries)
    target = Complex(complex_.strands, objects, differential)
    source = complex_

    def identity_component(deg: int) -> BlockMatrix:
        return BlockMatrix.identity(source.at(deg))

    forward_blocks: Dict[int, BlockMatrix] = {}
    backward_blocks: Dict[int, BlockMatrix] = {}
    for deg in source.degrees():
        if deg == k:
            forward_blocks[deg] = BlockMatrix(
                target.at(k), old_k, {(new, old): BimoduleMap.identity(old_k[old].module()) for old, new in new_k.items()}
            )
            entries = {(old, new): BimoduleMap.identity(old_k[old].module()) for old, new in new_k.items()}
            for c2, e in delta.items():
                entries[(c, new_k[c2])] = _reframed_scaled(e, old_k[c2], b, -inverse)
            backward_blocks[deg] = BlockMatrix(old_k, target.at(k), entries)
        elif deg == k + 1:
            entries = {(new, old): BimoduleMap.identity(old_next[old].module()) for old, new in new_next.items()}
            for r2, g in gamma.items():
                entries[(new_next[r2], r)] = _reframed_scaled(g, a, old_next[r2], -inverse)
            forward_blocks[deg] = BlockMatrix(target.at(k + 1), old_next, entries)
            backward_blocks[deg] = BlockMatrix(
                old_next,
                target.at(k + 1),
                {(old, new): BimoduleMap.identity(old_next[old].module()) for old, new in new_next.items()},
            )
        else:
            forward_blocks[deg] = identity_component(deg)
            backward_blocks[deg] = identity_component(deg)
    homotopy = BlockMatrix(
        old_k,
        old_next,
        {(c, r): BimoduleMap(a.module(), b.module(), 0, BimoduleMap.identity(a.module()).matrix.scale(-inverse))},
    )
    return HomotopyEquivalence(
        source,
        target,
        ChainMap(source, target, forward_blocks),
        ChainMap(target, source, backward_blocks),
        Homotopy(source, source, {k + 1: homotopy}, -1),
        Homotopy.zero(target, target),
    )


def gaussian_eliminate(complex_: Complex, presplit: bool = True, verify: bool = True) -> GaussianResult:
    """C ≃ C_reduced 와 정확한 증인

    Raises:
        ArithmeticError: 합성한 증인이 검증을 통과하지 못하면
    """
    total = HomotopyEquivalence.identity(complex_)
    current = complex_
    splits = 0
    while presplit:
        step = _split_once(current)
        if step is None:
            break
        total = total.then(step)
        current = step.target
        splits += 1
    cancellations = 0
    while True:
        found = find_cancellable(current)
        if found is None:
            break
        k, c, r, value = found
        logger.debug("%d 차 성분 %s → %s 소거 (λ=%s)", k, current.at(k)[c], current.at(k + 1)[r], value)
        step = cancel(current, k, c, r, value)
        total = total.then(step)
        current = step.target
        cancellations += 1
    logger.info(
        "가우스 소거: 합성분 %d → %d (나누기 %d, 소거 %d)",
        complex_.summand_count(),
        current.summand_count(),
        splits,
        cancellations,
    )
    if verify and not total.verify():
        raise ArithmeticError("가우스 소거 증인이 검증을 통과하지 못했습니다")
    return GaussianResult(current, total, splits, cancellations)
