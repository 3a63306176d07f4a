"""
내부 차수별 호몰로지 차원

내부 차수 t 의 조각은 유한 차원 ℚ-공간입니다. 기저는
(합성분, 기저 원소 b, 지수 합 (t − δ_b)/2 인 단항식) 이고,
dim H^k_t = dim C^k_t − rank d^k_t − rank d^{k−1}_t 입니다.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

from tqdm import tqdm

from constants import VARIABLE_DEGREE

from .complex import Complex, Summand
from .linear_system import matrix_rank
from .poly import Exponent, monomials_of_degree

logger = logging.getLogger(__name__)

BasisKey = Tuple[int, int, Exponent]


@dataclass(frozen=True)
class HomologyTable:
    """dims[t][k] = dim H^k 의 내부 차수 t 조각"""

    window: Tuple[int, int]
    dims: Dict[int, Dict[int, int]]

    def is_exact(self) -> bool:
        return all(dim == 0 for row in self.dims.values() for dim in row.values())

    def nonzero(self) -> List[Tuple[int, int, int]]:
        """(t, k, dim) 중 0 아닌 것"""
        return [(t, k, dim) for t, row in sorted(self.dims.items()) for k, dim in sorted(row.items()) if dim]

    def to_dict(self) -> Dict[str, Dict[str, int]]:
        return {str(t): {str(k): dim for k, dim in sorted(row.items())} for t, row in sorted(self.dims.items())}


def _graded_basis(summands: Tuple[Summand, ...], t: int) -> Dict[BasisKey, int]:
    basis: Dict[BasisKey, int] = {}
    for s_pos, summand in enumerate(summands):
        module = summand.module()
        for b, delta in enumerate(module.basis_degrees):
            gap = t - delta
            if gap < 0 or gap % VARIABLE_DEGREE:
                continue
            for exp in monomials_of_degree(summand.strands, gap // VARIABLE_DEGREE):
                basis[(s_pos, b, exp)] = len(basis)
    return basis


def _differential_rank(complex_: Complex, k: int, t: int, bases: Dict[int, Dict[BasisKey, int]]) -> int:
    """d^k 를 내부 차수 t 조각으로 제한한 행렬의 계수"""
    block = complex_.differential.get(k)
    if block is None:
        return 0
    source, target = bases[k], bases[k + 1]
    entries: Dict[Tuple[int, int], object] = {}
    for (r, c), f in block.entries.items():
        for (row, col), p in f.matrix.entries.items():
            for (s_pos, b, exp), column in source.items():
                if s_pos != c or b != col:
                    continue
                for e, coef in p.items():
                    key = (r, row, tuple(x + y for x, y in zip(exp, e)))
                    if key in target:
                        pos = (target[key], column)
                        entries[pos] = entries[pos] + coef if pos in entries else coef
    return matrix_rank(entries, len(target), len(source))


def degreewise_homology_dims(complex_: Complex, window: Tuple[int, int], progress: bool = False) -> HomologyTable:
    """창 [t_min, t_max] 의 내부 차수마다 호몰로지 차원표"""
    low, high = window
    if low > high:
        raise ValueError(f"차수 창이 잘못되었습니다: {window}")
    degrees = complex_.degrees()
    dims: Dict[int, Dict[int, int]] = {}
    for t in tqdm(range(low, high + 1), desc="homology", disable=not progress):
        bases = {k: _graded_basis(complex_.at(k), t) for k in range(min(degrees, default=0) - 1, max(degrees, default=0) + 2)}
        ranks = {k: _differential_rank(complex_, k, t, bases) for k in degrees}
        dims[t] = {k: len(bases[k]) - ranks.get(k, 0) - ranks.get(k - 1, 0) for k in degrees}
    table = HomologyTable((low, high), dims)
    logger.debug("호몰로지 차원표: %s", table.nonzero() or "모두 0")
    return table
