"""
쌍가군의 유계 사슬 복합체

미분은 호몰로지 차수를 1 올립니다 (d^k: C^k → C^{k+1}).
각 차수의 대상은 꼬리표 붙은 합성분(보트-사멜슨 단어 또는 순열 쌍가군)의
형식적 직합이고, 미분은 합성분 사이 사상들의 블록 행렬입니다.

합성분의 index 는 만든 과정을 기록하는 정렬 키입니다.
텐서곱은 두 index 를 이어붙이고 차수 안에서 index 순으로 정렬하므로
(A⋆B)⋆C 와 A⋆(B⋆C) 는 글자 그대로 같은 복합체가 됩니다.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .bimodule import Bimodule, permutation_bimodule, realize
from .hecke import HeckeElement, bs_class
from .morphism import BimoduleMap, tensor_k_maps, tensor_R_maps
from .value_objects import LaurentPoly, Permutation
from .words import BSWord

logger = logging.getLogger(__name__)

Position = Tuple[int, int]


@dataclass(frozen=True)
class Summand:
    """복합체 한 차수의 직합 성분: B_word⟨shift⟩ 또는 R_w⟨shift⟩"""

    strands: int
    letters: Tuple[int, ...] = ()
    shift: int = 0
    permutation: Optional[Permutation] = None
    index: Tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.permutation is not None:
            if self.letters:
                raise ValueError("순열 쌍가군 합성분에는 글자를 둘 수 없습니다")
            if self.permutation.size != self.strands:
                raise ValueError(f"순열 크기가 가닥 수와 다릅니다: {self.permutation.size} != {self.strands}")
            if self.permutation.is_identity():
                object.__setattr__(self, "permutation", None)
        BSWord(self.strands, self.letters, self.shift)

    @classmethod
    def from_word(cls, word: BSWord, index: Tuple[int, ...] = ()) -> "Summand":
        return cls(word.strands, word.letters, word.shift, None, index)

    @property
    def word(self) -> BSWord:
        return BSWord(self.strands, self.letters, self.shift)

    @property
    def is_permutation(self) -> bool:
        return self.permutation is not None

    @property
    def tag(self) -> Tuple:
        """가우스 소거에서 같은 합성분인지 비교하는 꼬리표"""
        twist = self.permutation.images if self.permutation is not None else None
        return (self.letters, self.shift, twist)

    def module(self) -> Bimodule:
        return _summand_module(self.strands, self.letters, self.shift, self.permutation)

    def shifted(self, amount: int) -> "Summand":
        return Summand(self.strands, self.letters, self.shift + amount, self.permutation, self.index)

    def with_index(self, index: Tuple[int, ...]) -> "Summand":
        return Summand(self.strands, self.letters, self.shift, self.permutation, index)

    def format(self) -> str:
        if self.permutation is not None:
            body = f"R_{self.permutation.format()}"
        elif self.letters:
            body = "".join(f"B{i}" for i in self.letters)
        else:
            body = "R"
        return body if self.shift == 0 else f"{body}⟨{self.shift}⟩"

    def __str__(self) -> str:
        return self.format()


@lru_cache(maxsize=None)
def _summand_module(strands: int, letters: Tuple[int, ...], shift: int, permutation: Optional[Permutation]) -> Bimodule:
    if permutation is not None:
        return permutation_bimodule(permutation, shift)
    return realize(BSWord(strands, letters, shift))


def combine_summands(left: Summand, right: Summand, external: bool) -> Summand:
    """⋆ (external=False) 또는 ⊠ (external=True) 의 합성분"""
    if not external and left.strands != right.strands:
        raise ValueError(f"가닥 수가 다른 합성분입니다: {left.strands} != {right.strands}")
    strands = left.strands + right.strands if external else left.strands
    index = left.index + right.index
    shift = left.shift + right.shift
    if left.is_permutation or right.is_permutation:
        if left.letters or right.letters:
            raise ValueError(f"순열 쌍가군과 보트-사멜슨 단어를 섞을 수 없습니다: {left} ⊗ {right}")
        left_twist = left.permutation or Permutation.identity(left.strands)
        right_twist = right.permutation or Permutation.identity(right.strands)
        twist = left_twist.parabolic(right_twist) if external else left_twist * right_twist
        return Summand(strands, (), shift, twist, index)
    moved = tuple(i + left.strands for i in right.letters) if external else right.letters
    return Summand(strands, left.letters + moved, shift, None, index)


@dataclass(frozen=True, eq=False)
class BlockMatrix:
    """합성분 사이 사상들의 희소 블록 행렬 (행 = 공역, 열 = 정의역)"""

    rows: Tuple[Summand, ...]
    cols: Tuple[Summand, ...]
    entries: Dict[Position, BimoduleMap] = field(default_factory=dict)

    def __post_init__(self):
        pruned = {}
        for (r, c), f in self.entries.items():
            if not (0 <= r < len(self.rows) and 0 <= c < len(self.cols)):
                raise ValueError(f"블록 위치가 범위를 벗어났습니다: ({r},{c})")
            if not (f.source.same_frame(self.cols[c].module()) and f.target.same_frame(self.rows[r].module())):
                raise ValueError(f"블록 ({r},{c}) 사상의 틀이 합성분과 다릅니다: {self.cols[c]} → {self.rows[r]}")
            if not f.is_zero():
                pruned[(r, c)] = f
        object.__setattr__(self, "entries", pruned)

    @classmethod
    def zero(cls, rows: Sequence[Summand], cols: Sequence[Summand]) -> "BlockMatrix":
        return cls(tuple(rows), tuple(cols), {})

    @classmethod
    def identity(cls, summands: Sequence[Summand]) -> "BlockMatrix":
        summands = tuple(summands)
        return cls(summands, summands, {(k, k): BimoduleMap.identity(s.module()) for k, s in enumerate(summands)})

    @property
    def shape(self) -> Tuple[int, int]:
        return (len(self.rows), len(self.cols))

    def get(self, r: int, c: int) -> BimoduleMap:
        if (r, c) in self.entries:
            return self.entries[(r, c)]
        return BimoduleMap.zero(self.cols[c].module(), self.rows[r].module())

    def is_zero(self) -> bool:
        return not self.entries

    def __matmul__(self, other: "BlockMatrix") -> "BlockMatrix":
        """self ∘ other"""
        if len(self.cols) != len(other.rows):
            raise ValueError(f"곱할 수 없는 블록 모양입니다: {self.shape} @ {other.shape}")
        by_row: Dict[int, List[Tuple[int, BimoduleMap]]] = {}
        for (m, c), g in other.entries.items():
            by_row.setdefault(m, []).append((c, g))
        entries: Dict[Position, BimoduleMap] = {}
        for (r, m), f in self.entries.items():
            for c, g in by_row.get(m, ()):
                product = f.compose(g)
                entries[(r, c)] = entries[(r, c)] + product if (r, c) in entries else product
        return BlockMatrix(self.rows, other.cols, entries)

    def __add__(self, other: "BlockMatrix") -> "BlockMatrix":
        if self.shape != other.shape:
            raise ValueError(f"더할 수 없는 블록 모양입니다: {self.shape} + {other.shape}")
        entries = dict(self.entries)
        for pos, f in other.entries.items():
            entries[pos] = entries[pos] + f if pos in entries else f
        return BlockMatrix(self.rows, self.cols, entries)

    def __neg__(self) -> "BlockMatrix":
        return BlockMatrix(self.rows, self.cols, {pos: -f for pos, f in self.entries.items()})

    def __sub__(self, other: "BlockMatrix") -> "BlockMatrix":
        return self + (-other)

    def scale(self, factor: Union[int, Fraction]) -> "BlockMatrix":
        return BlockMatrix(self.rows, self.cols, {pos: f.scale(factor) for pos, f in self.entries.items()})

    def relabeled(self, rows: Sequence[Summand], cols: Sequence[Summand]) -> "BlockMatrix":
        """같은 틀의 합성분 목록으로 바꿔 붙입니다."""
        rows, cols = tuple(rows), tuple(cols)
        entries = {
            (r, c): f.reframed(cols[c].module(), rows[r].module()) for (r, c), f in self.entries.items()
        }
        return BlockMatrix(rows, cols, entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BlockMatrix):
            return NotImplemented
        if [s.tag for s in self.rows] != [s.tag for s in other.rows]:
            return False
        if [s.tag for s in self.cols] != [s.tag for s in other.cols]:
            return False
        if self.entries.keys() != other.entries.keys():
            return False
        return all(f.matrix == other.entries[pos].matrix for pos, f in self.entries.items())

    __hash__ = None


@dataclass(frozen=True, eq=False)
class Complex:
    """유계 사슬 복합체 (objects[k] 합성분, differential[k]: C^k → C^{k+1})"""

    strands: int
    objects: Dict[int, Tuple[Summand, ...]]
    differential: Dict[int, BlockMatrix] = field(default_factory=dict)

    def __post_init__(self):
        objects = {k: tuple(v) for k, v in self.objects.items() if v}
        for k, summands in objects.items():
            for s in summands:
                if s.strands != self.strands:
                    raise ValueError(f"{k} 차 합성분의 가닥 수가 다릅니다: {s}")
        object.__setattr__(self, "objects", objects)
        differential = {}
        for k, block in self.differential.items():
            if block.is_zero():
                continue
            if block.shape != (len(objects.get(k + 1, ())), len(objects.get(k, ()))):
                raise ValueError(f"{k} 차 미분의 블록 모양이 대상과 다릅니다: {block.shape}")
            differential[k] = block
        object.__setattr__(self, "differential", differential)
        if not self.square_zero():
            raise ValueError("미분의 제곱이 0 이 아닙니다")

    # 생성
    @classmethod
    def zero(cls, strands: int) -> "Complex":
        return cls(strands, {}, {})

    @classmethod
    def single(cls, summand: Summand, degree: int = 0) -> "Complex":
        return cls(summand.strands, {degree: (summand,)}, {})

    @classmethod
    def unit(cls, strands: int) -> "Complex":
        """R 을 0 차에 둔 복합체 (빈 브레이드의 상)"""
        return cls.single(Summand(strands))

    # 조회
    def degrees(self) -> List[int]:
        return sorted(self.objects)

    def at(self, k: int) -> Tuple[Summand, ...]:
        return self.objects.get(k, ())

    def d(self, k: int) -> BlockMatrix:
        if k in self.differential:
            return self.differential[k]
        return BlockMatrix.zero(self.at(k + 1), self.at(k))

    def is_zero(self) -> bool:
        return not self.objects

    def summand_count(self) -> int:
        return sum(len(v) for v in self.objects.values())

    def square_zero(self) -> bool:
        """모든 k 에서 d^{k+1} ∘ d^k = 0"""
        for k in self.differential:
            if k + 1 in self.differential and not (self.differential[k + 1] @ self.differential[k]).is_zero():
                logger.debug("%d 차에서 d∘d ≠ 0", k)
                return False
        return True

    def validated(self) -> "Complex":
        """미분 성분이 차수 0 의 유효한 사상인지 확인한 뒤 자신을 돌려줍니다.

        d∘d = 0 은 생성 시점에 이미 확인합니다.
        """
        for k, block in self.differential.items():
            for pos, f in block.entries.items():
                if f.degree != 0 or not f.is_valid():
                    raise ValueError(f"{k} 차 미분 성분 {pos} 이 차수 0 의 유효한 사상이 아닙니다")
        return self

    # 변환
    def shifted(self, amount: int) -> "Complex":
        """내부 차수 이동 ⟨amount⟩"""
        if amount == 0:
            return self
        objects = {k: tuple(s.shifted(amount) for s in v) for k, v in self.objects.items()}
        differential = {
            k: block.relabeled(objects.get(k + 1, ()), objects[k]) for k, block in self.differential.items()
        }
        return Complex(self.strands, objects, differential)

    def reindexed(self, prefix: Tuple[int, ...]) -> "Complex":
        """모든 합성분 index 앞에 prefix 를 붙입니다."""
        objects = {k: tuple(s.with_index(prefix + s.index) for s in v) for k, v in self.objects.items()}
        differential = {
            k: BlockMatrix(objects.get(k + 1, ()), objects[k], block.entries) for k, block in self.differential.items()
        }
        return Complex(self.strands, objects, differential)

    # 비교/출력
    def same_as(self, other: "Complex") -> bool:
        """합성분 꼬리표와 미분 행렬이 글자 그대로 같은지"""
        if self.strands != other.strands or self.degrees() != other.degrees():
            return False
        for k in self.degrees():
            if [s.tag for s in self.at(k)] != [s.tag for s in other.at(k)]:
                return False
        if self.differential.keys() != other.differential.keys():
            return False
        return all(block == other.differential[k] for k, block in self.differential.items())

    def euler_characteristic(self) -> HeckeElement:
        return euler_characteristic(self)

    def pretty(self) -> str:
        """차수별 대상과 0 아닌 미분 성분을 보여 주는 텍스트"""
        lines = []
        for k in self.degrees():
            body = " ⊕ ".join(s.format() for s in self.at(k))
            lines.append(f"{body} @ {k}")
            block = self.differential.get(k)
            if block is None:
                continue
            for (r, c), f in sorted(block.entries.items()):
                matrix = "; ".join(", ".join(row) for row in f.format_rows())
                lines.append(f"      d({c}→{r}): {block.cols[c]} → {block.rows[r]}  [{matrix}]")
        return "\n".join(lines) if lines else "0"

    def __str__(self) -> str:
        return self.pretty()


def euler_characteristic(complex_: Complex) -> HeckeElement:
    """Σ_k (−1)^k Σ q^{shift}·b_word

    Raises:
        ValueError: 순열 쌍가군 합성분이 있으면 (헤케 대수 원소가 정해지지 않음)
    """
    total = HeckeElement.zero(complex_.strands)
    for k in complex_.degrees():
        for s in complex_.at(k):
            if s.is_permutation:
                raise ValueError(f"순열 쌍가군 합성분은 오일러 지표를 갖지 않습니다: {s}")
            term = bs_class(s.strands, s.letters, s.shift)
            total = total + (term if k % 2 == 0 else -term)
    return total


@dataclass(frozen=True, eq=False)
class GradedMap:
    """복합체 사이 호몰로지 차수 degree 의 사상 (components[k]: C^k → D^{k+degree})"""

    source: Complex
    target: Complex
    components: Dict[int, BlockMatrix] = field(default_factory=dict)
    degree: int = 0

    def __post_init__(self):
        components = {}
        for k, block in self.components.items():
            expected = (len(self.target.at(k + self.degree)), len(self.source.at(k)))
            if block.shape != expected:
                raise ValueError(f"{k} 차 성분의 블록 모양이 다릅니다: {block.shape} != {expected}")
            if not block.is_zero():
                components[k] = block
        object.__setattr__(self, "components", components)

    def component(self, k: int) -> BlockMatrix:
        if k in self.components:
            return self.components[k]
        return BlockMatrix.zero(self.target.at(k + self.degree), self.source.at(k))

    def is_zero(self) -> bool:
        return not self.components

    def _rebuild(self, components: Dict[int, BlockMatrix], source=None, target=None, degree=None):
        return type(self)(
            source or self.source,
            target or self.target,
            components,
            self.degree if degree is None else degree,
        )

    def __add__(self, other: "GradedMap") -> "GradedMap":
        if self.degree != other.degree:
            raise ValueError(f"차수가 다른 사상은 더할 수 없습니다: {self.degree} != {other.degree}")
        keys = set(self.components) | set(other.components)
        return self._rebuild({k: self.component(k) + other.component(k) for k in keys})

    def __neg__(self) -> "GradedMap":
        return self._rebuild({k: -block for k, block in self.components.items()})

    def __sub__(self, other: "GradedMap") -> "GradedMap":
        return self + (-other)

    def scale(self, factor: Union[int, Fraction]) -> "GradedMap":
        return self._rebuild({k: block.scale(factor) for k, block in self.components.items()})

    def compose(self, other: "GradedMap") -> "GradedMap":
        """self ∘ other (차수는 더해지고, 종류는 차수로 정해집니다)"""
        degree = self.degree + other.degree
        components = {}
        for k in other.components:
            mid = k + other.degree
            if mid in self.components:
                components[k] = self.components[mid] @ other.components[k]
        return graded_map(other.source, self.target, components, degree)

    def shifted(self, amount: int) -> "GradedMap":
        """정의역과 공역을 함께 ⟨amount⟩ 이동"""
        source, target = self.source.shifted(amount), self.target.shifted(amount)
        components = {
            k: block.relabeled(target.at(k + self.degree), source.at(k)) for k, block in self.components.items()
        }
        return self._rebuild(components, source, target)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedMap):
            return NotImplemented
        if self.degree != other.degree:
            return False
        keys = set(self.components) | set(other.components)
        return all(self.component(k) == other.component(k) for k in keys)

    __hash__ = None


class ChainMap(GradedMap):
    """차수 0 사슬 사상"""

    @classmethod
    def identity(cls, complex_: Complex) -> "ChainMap":
        return cls(complex_, complex_, {k: BlockMatrix.identity(complex_.at(k)) for k in complex_.degrees()}, 0)

    @classmethod
    def zero(cls, source: Complex, target: Complex) -> "ChainMap":
        return cls(source, target, {}, 0)

    def is_chain_map(self) -> bool:
        return is_chain_map(self)


class Homotopy(GradedMap):
    """차수 −1 호모토피 (components[k]: C^k → D^{k−1})"""

    @classmethod
    def zero(cls, source: Complex, target: Complex) -> "Homotopy":
        return cls(source, target, {}, -1)

    def boundary(self) -> ChainMap:
        """d h + h d"""
        return boundary(self)


def graded_map(source: Complex, target: Complex, components: Dict[int, BlockMatrix], degree: int) -> GradedMap:
    if degree == 0:
        return ChainMap(source, target, components, 0)
    if degree == -1:
        return Homotopy(source, target, components, -1)
    return GradedMap(source, target, components, degree)


def _all_degrees(source: Complex, target: Complex) -> List[int]:
    return sorted(set(source.degrees()) | set(target.degrees()))


def is_chain_map(f: GradedMap) -> bool:
    """모든 k 에서 d_D^k f^k = f^{k+1} d_C^k"""
    if f.degree != 0:
        return False
    for k in _all_degrees(f.source, f.target):
        left = f.target.d(k) @ f.component(k)
        right = f.component(k + 1) @ f.source.d(k)
        if left != right:
            logger.debug("%d 차에서 사슬 사상 조건이 깨집니다", k)
            return False
    return True


def boundary(h: GradedMap) -> ChainMap:
    """[d, h] = d_D h + h d_C (h 는 차수 −1)"""
    components = {}
    for k in _all_degrees(h.source, h.target):
        block = h.target.d(k - 1) @ h.component(k) + h.component(k + 1) @ h.source.d(k)
        if not block.is_zero():
            components[k] = block
    return ChainMap(h.source, h.target, components, 0)


# 텐서곱
TensorFn = Callable[[Bimodule, Bimodule], Bimodule]
MapTensorFn = Callable[[BimoduleMap, BimoduleMap], BimoduleMap]


@dataclass(frozen=True)
class TensorLayout:
    """두 복합체 합성분 쌍의 전체 복합체 위치표"""

    objects: Dict[int, Tuple[Summand, ...]]
    position: Dict[Tuple[int, int, int, int], int]


def tensor_layout(left: Complex, right: Complex, external: bool) -> TensorLayout:
    """(p, a, q, b) ↦ p+q 차의 위치, 차수 안에서는 이어붙인 index 순"""
    buckets: Dict[int, List[Tuple[Tuple[int, ...], Tuple[int, int, int, int], Summand]]] = {}
    for p in left.degrees():
        for a, sa in enumerate(left.at(p)):
            for q in right.degrees():
                for b, sb in enumerate(right.at(q)):
                    combined = combine_summands(sa, sb, external)
                    buckets.setdefault(p + q, []).append((combined.index, (p, a, q, b), combined))
    objects: Dict[int, Tuple[Summand, ...]] = {}
    position: Dict[Tuple[int, int, int, int], int] = {}
    for n, items in buckets.items():
        items.sort(key=lambda item: (item[0], item[1]))
        objects[n] = tuple(item[2] for item in items)
        for pos, item in enumerate(items):
            position[item[1]] = pos
    return TensorLayout(objects, position)


def _tensor_complexes(left: Complex, right: Complex, external: bool) -> Complex:
    map_tensor: MapTensorFn = tensor_k_maps if external else tensor_R_maps
    layout = tensor_layout(left, right, external)
    strands = left.strands + right.strands if external else left.strands
    entries: Dict[int, Dict[Position, BimoduleMap]] = {}

    def place(n: int, row: int, col: int, f: BimoduleMap) -> None:
        source = layout.objects[n][col].module()
        target = layout.objects[n + 1][row].module()
        f = f.reframed(source, target)
        bucket = entries.setdefault(n, {})
        bucket[(row, col)] = bucket[(row, col)] + f if (row, col) in bucket else f

    for p in left.degrees():
        for q in right.degrees():
            n = p + q
            sign = -1 if p % 2 else 1
            for a, sa in enumerate(left.at(p)):
                for b, sb in enumerate(right.at(q)):
                    col = layout.position[(p, a, q, b)]
                    identity_b = BimoduleMap.identity(sb.module())
                    for (a2, a1), f in left.d(p).entries.items():
                        if a1 == a:
                            place(n, layout.position[(p + 1, a2, q, b)], col, map_tensor(f, identity_b))
                    identity_a = BimoduleMap.identity(sa.module())
                    for (b2, b1), g in right.d(q).entries.items():
                        if b1 == b:
                            place(n, layout.position[(p, a, q + 1, b2)], col, map_tensor(identity_a, g).scale(sign))
    differential = {
        n: BlockMatrix(layout.objects.get(n + 1, ()), layout.objects[n], bucket) for n, bucket in entries.items()
    }
    return Complex(strands, layout.objects, differential)


def tensor_R_complexes(left: Complex, right: Complex) -> Complex:
    """C ⋆ D: 총 복합체, id⊗d 성분에 (−1)^p"""
    if left.strands != right.strands:
        raise ValueError(f"가닥 수가 다른 복합체입니다: {left.strands} != {right.strands}")
    return _tensor_complexes(left, right, external=False)


def tensor_k_complexes(left: Complex, right: Complex) -> Complex:
    """C ⊠ D: 포물형 유도의 총 복합체"""
    return _tensor_complexes(left, right, external=True)


def star(complexes: Iterable[Complex], strands: int) -> Complex:
    """C_1 ⋆ C_2 ⋆ … (빈 목록이면 R)"""
    result: Optional[Complex] = None
    for c in complexes:
        result = c if result is None else tensor_R_complexes(result, c)
    return result if result is not None else Complex.unit(strands)


def tensor_graded_maps(f: GradedMap, g: GradedMap, external: bool) -> GradedMap:
    """f ⊗ g, 부호 (−1)^{deg(g)·p} (p: f 정의역 합성분의 차수)"""
    map_tensor: MapTensorFn = tensor_k_maps if external else tensor_R_maps
    tensor_complex = tensor_k_complexes if external else tensor_R_complexes
    source = tensor_complex(f.source, g.source)
    target = tensor_complex(f.target, g.target)
    source_layout = tensor_layout(f.source, g.source, external)
    target_layout = tensor_layout(f.target, g.target, external)
    degree = f.degree + g.degree
    entries: Dict[int, Dict[Position, BimoduleMap]] = {}
    for p, f_block in f.components.items():
        for q, g_block in g.components.items():
            n = p + q
            sign = -1 if (g.degree * p) % 2 else 1
            for (a2, a), fa in f_block.entries.items():
                for (b2, b), gb in g_block.entries.items():
                    col = source_layout.position[(p, a, q, b)]
                    row = target_layout.position[(p + f.degree, a2, q + g.degree, b2)]
                    piece = map_tensor(fa, gb).reframed(source.at(n)[col].module(), target.at(n + degree)[row].module())
                    if sign < 0:
                        piece = -piece
                    bucket = entries.setdefault(n, {})
                    bucket[(row, col)] = bucket[(row, col)] + piece if (row, col) in bucket else piece
    components = {n: BlockMatrix(target.at(n + degree), source.at(n), bucket) for n, bucket in entries.items()}
    return graded_map(source, target, components, degree)


def identity_map(complex_: Complex) -> ChainMap:
    return ChainMap.identity(complex_)


def cone(f: GradedMap) -> Complex:
    """cone(f: A → B)^k = A^{k+1} ⊕ B^k, d = [[−d_A, 0], [f, d_B]]

    A 부분 합성분 index 앞에 (0,), B 부분에 (1,) 을 붙입니다.

    Raises:
        ValueError: f 가 사슬 사상이 아니어서 d∘d ≠ 0 이 되면
    """
    if f.degree != 0:
        raise ValueError("사슬 사상의 원뿔만 만들 수 있습니다")
    a, b = f.source, f.target
    degrees = sorted({k - 1 for k in a.degrees()} | set(b.degrees()))
    objects = {
        k: tuple(s.with_index((0,) + s.index) for s in a.at(k + 1)) + tuple(s.with_index((1,) + s.index) for s in b.at(k))
        for k in degrees
    }
    differential = {}
    for k in degrees:
        width_a = len(a.at(k + 1))
        width_a_next = len(a.at(k + 2))
        entries: Dict[Position, BimoduleMap] = {}
        for (r, c), g in a.d(k + 1).entries.items():
            entries[(r, c)] = -g
        for (r, c), g in f.component(k + 1).entries.items():
            entries[(width_a_next + r, c)] = g
        for (r, c), g in b.d(k).entries.items():
            entries[(width_a_next + r, width_a + c)] = g
        if entries:
            differential[k] = BlockMatrix(objects.get(k + 1, ()), objects[k], entries)
    return Complex(a.strands, objects, differential)
