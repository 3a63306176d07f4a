"""
쌍가군 실현, Hom 공간, 표준 생성 사상 테스트
"""

import pytest

from common.enums import BimoduleKind
from core.domain.bimodule import (
    permutation_bimodule,
    realize,
    regular_bimodule,
    shift,
    tensor_k,
    tensor_R,
    verify_realization,
)
from core.domain.generators import (
    dot,
    idempotent_split_BiBi,
    merge,
    split,
    standard_generators,
    unit_dot,
)
from core.domain.morphism import (
    BimoduleMap,
    clear_hom_cache,
    hom_basis,
    hom_cache_info,
    hom_dimension,
    hom_dimension_bruteforce,
)
from core.domain.poly import Poly
from core.domain.value_objects import LaurentPoly, Permutation
from core.domain.words import BSWord

QUANTUM_TWO = LaurentPoly.from_dict({-1: 1, 1: 1})


def bs(strands: int, letters=(), shift_amount: int = 0):
    return realize(BSWord(strands, tuple(letters), shift_amount))


class TestRealization:
    """보트-사멜슨 쌍가군 실현 테스트"""

    @pytest.mark.parametrize("letters", [(1,), (1, 2), (1, 2, 1), (2, 1, 2, 1)])
    def test_rank_is_power_of_two(self, letters):
        module = bs(3, letters)
        assert module.rank == 2 ** len(letters)
        assert module.graded_rank() == QUANTUM_TWO ** len(letters)

    @pytest.mark.parametrize("letters", [(), (1,), (2, 1), (1, 1)])
    def test_verify_realization(self, letters):
        assert verify_realization(bs(3, letters))

    def test_letter_basis_degrees(self):
        assert bs(2, (1,)).basis_degrees == (-1, 1)
        assert bs(2, (1,), 2).basis_degrees == (1, 3)

    def test_shift_adds_to_degrees(self):
        module = shift(bs(2, (1,)), -1)
        assert module.basis_degrees == (-2, 0)
        assert shift(module, 0) is module

    def test_tensor_R_concatenates_letters(self):
        product = tensor_R(bs(3, (1,)), bs(3, (2,)))
        assert product.letters == (1, 2)
        assert product.rank == 4

    def test_tensor_k_moves_letters(self):
        product = tensor_k(bs(2, (1,)), bs(2, (1,)))
        assert product.strands == 4
        assert product.letters == (1, 3)
        assert verify_realization(product)

    def test_letter_out_of_range(self):
        with pytest.raises(ValueError, match="범위"):
            bs(2, (2,))

    def test_strand_mismatch(self):
        with pytest.raises(ValueError, match="가닥 수"):
            tensor_R(bs(2, (1,)), bs(3, (1,)))


class TestPermutationBimodule:
    """순열 쌍가군 R_w 테스트"""

    def test_identity_is_regular(self):
        assert permutation_bimodule(Permutation.identity(3)) == regular_bimodule(3)

    def test_twisted_left_action(self):
        """x_j 의 왼쪽 작용은 x_{w^{-1}(j)}"""
        w = Permutation.transposition(1, 2)
        module = permutation_bimodule(w)
        assert module.kind is BimoduleKind.PERMUTATION
        assert module.left_action[0].get(0, 0) == Poly.variable(2, 2)
        assert verify_realization(module)

    def test_twists_compose(self):
        s = Permutation.transposition(1, 2)
        product = tensor_R(permutation_bimodule(s), permutation_bimodule(s))
        assert product.kind is BimoduleKind.BOTT_SAMELSON
        assert product.twist is None


class TestHomSpaces:
    """정확한 Hom 공간 풀이 테스트"""

    def test_end_of_regular(self):
        """End(R) 은 0 차 1 차원, 2 차는 변수 개수"""
        assert hom_dimension(regular_bimodule(2), regular_bimodule(2), 0) == 1
        assert hom_dimension(regular_bimodule(2), regular_bimodule(2), 2) == 2
        assert hom_dimension(regular_bimodule(2), regular_bimodule(2), 1) == 0
        assert hom_dimension(regular_bimodule(2), regular_bimodule(2), -2) == 0

    def test_dot_and_unit_spaces(self):
        assert hom_dimension(bs(2, (1,)), regular_bimodule(2, -1), 0) == 1
        assert hom_dimension(regular_bimodule(2, 1), bs(2, (1,)), 0) == 1

    def test_end_of_letter(self):
        assert hom_dimension(bs(2, (1,)), bs(2, (1,)), 0) == 1
        assert hom_dimension(bs(2, (1,)), bs(2, (1,)), -2) == 0

    @pytest.mark.parametrize("k", [-1, 0, 1])
    @pytest.mark.parametrize("l", [-1, 0, 1])
    @pytest.mark.parametrize("d", [-2, 0, 2])
    def test_grading_identity(self, k, l, d):
        """Hom(M⟨k⟩, N⟨l⟩)^d = Hom(M, N)^{d+k−l}"""
        source, target = bs(2, (1,)), regular_bimodule(2)
        shifted = hom_dimension(shift(source, k), shift(target, l), d)
        assert shifted == hom_dimension(source, target, d + k - l)

    def test_bruteforce_agrees(self):
        assert hom_dimension_bruteforce(bs(2, (1,)), bs(2, (1,)), 0) == 1
        assert hom_dimension_bruteforce(bs(2, (1,)), regular_bimodule(2, -1), 0) == 1

    def test_basis_maps_are_valid(self):
        for f in hom_basis(bs(3, (1, 2)), bs(3, (1, 2)), 0):
            assert f.is_valid()
            assert f.degree == 0

    def test_strand_mismatch(self):
        with pytest.raises(ValueError, match="가닥 수"):
            hom_basis(bs(2, (1,)), bs(3, (1,)), 0)


class TestHomCache:
    """틀 키 기준 Hom 기저 캐시 테스트"""

    def test_same_frame_is_solved_once(self):
        clear_hom_cache()
        first = hom_basis(bs(2, (1,)), bs(2, (), -1), 0)
        source, target = bs(2, (1,)), bs(2, (), -1)
        second = hom_basis(source, target, 0)
        info = hom_cache_info()
        assert (info.hits, info.misses) == (1, 1)
        assert [f.matrix for f in first] == [f.matrix for f in second]
        assert all(f.source is source and f.target is target for f in second)

    def test_shift_changes_frame(self):
        clear_hom_cache()
        hom_basis(bs(2, (1,)), bs(2, (), -1), 0)
        hom_basis(bs(2, (1,), 2), bs(2, (), 1), 0)
        assert hom_cache_info().currsize == 2

    def test_clear(self):
        hom_basis(bs(2, (1,)), bs(2, (1,)), 0)
        clear_hom_cache()
        assert hom_cache_info().currsize == 0


class TestGenerators:
    """표준 생성 사상 테스트"""

    def test_dot_after_unit_dot_is_root(self):
        """m ∘ Δ = α_i"""
        composite = dot(1, 2).compose(unit_dot(1, 2))
        assert composite.matrix.get(0, 0) == Poly.root(2, 1)

    def test_merge_after_split_vanishes(self):
        assert merge(1, 2).compose(split(1, 2)).is_zero()

    def test_idempotent_split(self):
        assert idempotent_split_BiBi(1, 3).check()

    def test_standard_generators_valid(self):
        generators = standard_generators(3)
        assert len(generators) == 12
        assert all(f.is_valid() for f in generators.values())

    def test_compose_requires_matching_frames(self):
        with pytest.raises(ValueError, match="합성할 수 없는"):
            dot(1, 2).compose(dot(1, 2))

    def test_identity_is_valid(self):
        assert BimoduleMap.identity(bs(3, (2, 1))).is_valid()
