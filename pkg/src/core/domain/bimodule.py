"""
보트-사멜슨 쌍가군의 실현

각 쌍가군을 자유 오른쪽 R_n-가군으로 보고, 기저 차수와
변수 x_j 의 왼쪽 곱셈 행렬 L_j 로 표현합니다.

    L_j[r][c] = x_j · b_c 를 오른쪽 기저로 썼을 때 b_r 의 계수

글자 하나 B_i 의 기저는 {1⊗1, α_i⊗1}, 기저 차수는 [-1, +1] 입니다.
단어의 기저 번호는 가장 왼쪽 글자가 최상위 비트입니다.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Optional, Sequence, Tuple

from common.enums import BimoduleKind

from .poly import Poly
from .poly_matrix import PolyMatrix, block_diagonal, evaluate_at_matrices
from .value_objects import LaurentPoly, Permutation
from .words import BSWord

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Bimodule:
    """등급 R_n-쌍가군 (자유 오른쪽 가군 + 왼쪽 작용 행렬)"""

    strands: int
    basis_degrees: Tuple[int, ...]
    left_action: Tuple[PolyMatrix, ...]
    kind: BimoduleKind = BimoduleKind.BOTT_SAMELSON
    letters: Tuple[int, ...] = ()
    twist: Optional[Permutation] = None

    def __post_init__(self):
        if len(self.left_action) != self.strands:
            raise ValueError(f"왼쪽 작용 행렬 개수가 가닥 수와 다릅니다: {len(self.left_action)} != {self.strands}")
        for matrix in self.left_action:
            if matrix.shape != (self.rank, self.rank) or matrix.nvars != self.strands:
                raise ValueError(f"왼쪽 작용 행렬 모양이 잘못되었습니다: {matrix.shape}, 계수 {self.rank}")
        if self.twist is not None and self.twist.size != self.strands:
            raise ValueError(f"꼬임 순열 크기가 가닥 수와 다릅니다: {self.twist.size} != {self.strands}")

    @property
    def rank(self) -> int:
        return len(self.basis_degrees)

    def graded_rank(self) -> LaurentPoly:
        return graded_rank(self)

    def shifted(self, amount: int) -> "Bimodule":
        return shift(self, amount)

    def right_action_image(self, p: Poly) -> Poly:
        """오른쪽에서 p 를 곱한 효과를 다항식으로: 순열 쌍가군이면 w(p)"""
        if self.twist is None:
            return p
        return p.permuted(self.twist)

    def left_multiplication(self, p: Poly) -> PolyMatrix:
        """p 의 왼쪽 곱셈 행렬 p(L_1, …, L_n)"""
        return evaluate_at_matrices(p, self.left_action)

    def same_frame(self, other: "Bimodule") -> bool:
        """사상의 정의역/공역으로 바꿔 끼울 수 있는지 (기저 차수, 가닥 수)"""
        return self.strands == other.strands and self.basis_degrees == other.basis_degrees


def regular_bimodule(strands: int, amount: int = 0) -> Bimodule:
    """R⟨amount⟩"""
    action = tuple(
        PolyMatrix.scalar(1, strands, Poly.variable(strands, j)) for j in range(1, strands + 1)
    )
    return Bimodule(strands, (amount,), action, BimoduleKind.BOTT_SAMELSON, ())


@lru_cache(maxsize=None)
def realize_letter(i: int, strands: int) -> Bimodule:
    """B_i = R ⊗_{R^i} R ⟨-1⟩, 기저 {1⊗1, α_i⊗1}"""
    if not 1 <= i <= strands - 1:
        raise ValueError(f"글자가 범위를 벗어났습니다: {i} (n={strands})")
    alpha = Poly.root(strands, i)
    action = []
    for j in range(1, strands + 1):
        x = Poly.variable(strands, j)
        even_0, odd_0 = x.invariant_split(i)
        even_1, odd_1 = (x * alpha).invariant_split(i)
        action.append(PolyMatrix.from_rows([[even_0, even_1], [odd_0, odd_1]], strands))
    return Bimodule(strands, (-1, 1), tuple(action), BimoduleKind.BOTT_SAMELSON, (i,))


@lru_cache(maxsize=None)
def _realize_letters(strands: int, letters: Tuple[int, ...]) -> Bimodule:
    if not letters:
        return regular_bimodule(strands)
    if len(letters) == 1:
        return realize_letter(letters[0], strands)
    return tensor_R(realize_letter(letters[0], strands), _realize_letters(strands, letters[1:]))


def realize(word: BSWord) -> Bimodule:
    """BSWord 를 쌍가군으로 실현합니다. 계수 2^k, 기저 차수 shift + Σ(2ε_t − 1)."""
    base = _realize_letters(word.strands, word.letters)
    return shift(base, word.shift) if word.shift else base


def shift(module: Bimodule, amount: int) -> Bimodule:
    """M⟨amount⟩: 기저 차수에 amount 를 더합니다."""
    if amount == 0:
        return module
    return Bimodule(
        module.strands,
        tuple(d + amount for d in module.basis_degrees),
        module.left_action,
        module.kind,
        module.letters,
        module.twist,
    )


def permutation_bimodule(w: Permutation, amount: int = 0) -> Bimodule:
    """R_w⟨amount⟩: 오른쪽 작용이 w 로 꼬인 계수 1 쌍가군

    기저 1 에 대해 1·f = w(f) 이므로 x_j = 1·x_{w^{-1}(j)} 이고,
    왼쪽 작용 행렬은 [[x_{w^{-1}(j)}]] 입니다. 항등 순열이면 R 과 같습니다.
    """
    if w.is_identity():
        return regular_bimodule(w.size, amount)
    n = w.size
    inverse = w.inverse()
    action = tuple(PolyMatrix.scalar(1, n, Poly.variable(n, inverse(j))) for j in range(1, n + 1))
    return Bimodule(n, (amount,), action, BimoduleKind.PERMUTATION, (), w)


def _is_permutation_like(module: Bimodule) -> bool:
    """순열 쌍가군 또는 R 자신"""
    if module.kind is BimoduleKind.PERMUTATION:
        return True
    return module.kind is BimoduleKind.BOTT_SAMELSON and not module.letters


def _combined_kind(left: Bimodule, right: Bimodule, external: bool):
    """텐서곱 결과의 (종류, 글자, 꼬임)"""
    if left.kind is BimoduleKind.BOTT_SAMELSON and right.kind is BimoduleKind.BOTT_SAMELSON:
        moved = tuple(i + left.strands for i in right.letters) if external else right.letters
        return BimoduleKind.BOTT_SAMELSON, left.letters + moved, None
    if _is_permutation_like(left) and _is_permutation_like(right):
        left_twist = left.twist or Permutation.identity(left.strands)
        right_twist = right.twist or Permutation.identity(right.strands)
        twist = left_twist.parabolic(right_twist) if external else left_twist * right_twist
        if twist.is_identity():
            return BimoduleKind.BOTT_SAMELSON, (), None
        return BimoduleKind.PERMUTATION, (), twist
    return BimoduleKind.MIXED, (), None


def tensor_R(left: Bimodule, right: Bimodule) -> Bimodule:
    """M ⊗_R N

    기저 (k, l) ↦ k·rank(N) + l, 차수는 합.
    L_j[(k,l),(a,b)] = ev(L^M_j[k][a], L^N)[l][b]
    """
    if left.strands != right.strands:
        raise ValueError(f"가닥 수가 다른 쌍가군입니다: {left.strands} != {right.strands}")
    n_rank = right.rank
    evaluated: Dict[Poly, PolyMatrix] = {}
    action = []
    for matrix in left.left_action:
        entries = {}
        for (k, a), p in matrix.entries.items():
            if p not in evaluated:
                evaluated[p] = right.left_multiplication(p)
            for (l, b), value in evaluated[p].entries.items():
                entries[(k * n_rank + l, a * n_rank + b)] = value
        action.append(PolyMatrix(left.rank * n_rank, left.rank * n_rank, left.strands, entries))
    degrees = tuple(dm + dn for dm in left.basis_degrees for dn in right.basis_degrees)
    kind, letters, twist = _combined_kind(left, right, external=False)
    return Bimodule(left.strands, degrees, tuple(action), kind, letters, twist)


def tensor_k(left: Bimodule, right: Bimodule) -> Bimodule:
    """M ⊠ N: R_m, R_n 쌍가군에서 R_{m+n} 쌍가군으로 (포물형 유도)"""
    total = left.strands + right.strands
    left_identity = PolyMatrix.identity(left.rank, left.strands)
    right_identity = PolyMatrix.identity(right.rank, right.strands)
    action = [matrix.kron_external(right_identity) for matrix in left.left_action]
    action += [left_identity.kron_external(matrix) for matrix in right.left_action]
    degrees = tuple(dm + dn for dm in left.basis_degrees for dn in right.basis_degrees)
    kind, letters, twist = _combined_kind(left, right, external=True)
    return Bimodule(total, degrees, tuple(action), kind, letters, twist)


def direct_sum(summands: Sequence[Bimodule], strands: int) -> Bimodule:
    """합성분들의 형식적 직합 (블록 대각 왼쪽 작용)"""
    if any(m.strands != strands for m in summands):
        raise ValueError("가닥 수가 다른 합성분이 있습니다")
    degrees = tuple(d for m in summands for d in m.basis_degrees)
    action = tuple(
        block_diagonal([m.left_action[j] for m in summands], strands) for j in range(strands)
    )
    return Bimodule(strands, degrees, action, BimoduleKind.DIRECT_SUM)


def graded_rank(module: Bimodule) -> LaurentPoly:
    """Σ_기저 q^{차수}"""
    terms: Dict[int, int] = {}
    for d in module.basis_degrees:
        terms[d] = terms.get(d, 0) + 1
    return LaurentPoly.from_dict(terms)


def verify_realization(module: Bimodule) -> bool:
    """왼쪽 작용 행렬의 가환성, 차수 동차성, 글자별 불변식 통과 관계를 검사합니다."""
    action = module.left_action
    for a in range(len(action)):
        for b in range(a + 1, len(action)):
            if action[a] @ action[b] != action[b] @ action[a]:
                logger.debug("왼쪽 작용 x%d, x%d 가 가환하지 않습니다", a + 1, b + 1)
                return False
    degrees = module.basis_degrees
    for j, matrix in enumerate(action, start=1):
        for (r, c), value in matrix.entries.items():
            if not value.is_homogeneous(2 + degrees[c] - degrees[r]):
                logger.debug("x%d 행렬 (%d,%d) 성분이 동차가 아닙니다: %s", j, r, c, value)
                return False
    if module.kind is BimoduleKind.BOTT_SAMELSON and module.letters:
        return _invariants_pass_through(module)
    return True


def _invariant_generators(i: int, strands: int) -> Tuple[Poly, ...]:
    """R^{s_i} 의 대수 생성원: x_i + x_{i+1}, x_i·x_{i+1}, 나머지 x_j"""
    x = [Poly.variable(strands, j) for j in range(1, strands + 1)]
    generators = [x[i - 1] + x[i], x[i - 1] * x[i]]
    generators += [x[j] for j in range(strands) if j not in (i - 1, i)]
    return tuple(generators)


def _invariants_pass_through(module: Bimodule) -> bool:
    """첫 글자 i 에 대해 r ∈ R^{s_i} 가 r·(1⊗m) = 1⊗(r·m) 을 만족하는지 재귀적으로 확인"""
    first, rest = module.letters[0], module.letters[1:]
    tail = _realize_letters(module.strands, rest)
    tail_rank = tail.rank
    for r in _invariant_generators(first, module.strands):
        whole = module.left_multiplication(r)
        inner = tail.left_multiplication(r)
        for b in range(tail_rank):
            for l in range(module.rank):
                expected = inner.get(l, b) if l < tail_rank else Poly.zero(module.strands)
                if whole.get(l, b) != expected:
                    logger.debug("불변 다항식 %s 가 글자 %d 를 통과하지 못합니다", r, first)
                    return False
    return verify_realization(tail) if rest else True
