"""
도메인 레이어 - 정확한 유리수 산술 위의 쇠르겔 계산

헥사고날 아키텍처의 핵심 도메인 레이어입니다.
값 객체(로랑 다항식, 순열, 단어)와 쌍가군, 사상, 복합체는 모두 불변입니다.
"""

# 값 객체
from .value_objects import LaurentPoly, Permutation
from .words import BraidLetter, BraidWord, BSWord, parse_braid, parse_bs_word
from .errors import RealizationError, WordParseError

# 다항식환과 쌍가군
from .poly import Poly, parse_poly, polynomial_ring
from .bimodule import Bimodule, realize, shift
from .morphism import BimoduleMap, hom_basis, hom_dimension

# 복합체
from .complex import Complex, GradedMap, Summand, cone, star
from .rouquier import cabled_crossing, rouquier

# 헤케 대수
from .hecke import HeckeElement, braid_image

__all__ = [
    # 값 객체
    "LaurentPoly",
    "Permutation",
    "BraidLetter",
    "BraidWord",
    "BSWord",
    "parse_braid",
    "parse_bs_word",
    "RealizationError",
    "WordParseError",

    # 다항식환과 쌍가군
    "Poly",
    "parse_poly",
    "polynomial_ring",
    "Bimodule",
    "realize",
    "shift",
    "BimoduleMap",
    "hom_basis",
    "hom_dimension",

    # 복합체
    "Complex",
    "GradedMap",
    "Summand",
    "cone",
    "star",
    "cabled_crossing",
    "rouquier",

    # 헤케 대수
    "HeckeElement",
    "braid_image",
]
