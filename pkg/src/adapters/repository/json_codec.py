"""
JSON 직렬화

모든 최상위 문서에 "schema" 필드를 붙이고, 키 정렬과 정준 항 순서로
같은 입력이면 바이트 단위로 같은 출력을 냅니다.
"""

import json
from typing import Dict, List

from constants import SCHEMA_VERSION
from core.domain.bimodule import Bimodule
from core.domain.complex import Complex, GradedMap
from core.domain.equivalence import EquivalenceSearch, HomotopyEquivalence
from core.domain.hecke import HeckeElement
from core.domain.morphism import BimoduleMap
from core.domain.value_objects import LaurentPoly


def laurent_to_text(value: LaurentPoly) -> str:
    return value.format()


def bimodule_descriptor(module: Bimodule) -> Dict[str, object]:
    """사상의 정의역/공역 표기용 요약"""
    return {
        "kind": module.kind.name,
        "letters": list(module.letters),
        "twist": module.twist.format() if module.twist is not None else None,
        "basis_degrees": list(module.basis_degrees),
    }


def bimodule_to_dict(module: Bimodule) -> Dict[str, object]:
    result = bimodule_descriptor(module)
    result["strands"] = module.strands
    result["graded_rank"] = laurent_to_text(module.graded_rank())
    result["left_action"] = {f"x{j + 1}": matrix.format_rows() for j, matrix in enumerate(module.left_action)}
    return result


def map_to_dict(f: BimoduleMap) -> Dict[str, object]:
    return {
        "source": bimodule_descriptor(f.source),
        "target": bimodule_descriptor(f.target),
        "degree": f.degree,
        "matrix": f.format_rows(),
    }


def complex_to_dict(complex_: Complex) -> Dict[str, object]:
    degrees: List[Dict[str, object]] = []
    for k in complex_.degrees():
        block = complex_.differential.get(k)
        components = []
        if block is not None:
            for (r, c), f in sorted(block.entries.items()):
                components.append({"from": c, "to": r, "matrix": f.format_rows()})
        degrees.append(
            {
                "degree": k,
                "summands": [s.format() for s in complex_.at(k)],
                "differential": components,
            }
        )
    return {"strands": complex_.strands, "degrees": degrees, "summand_count": complex_.summand_count()}


def graded_map_to_dict(f: GradedMap) -> Dict[str, object]:
    components = []
    for k in sorted(f.components):
        block = f.components[k]
        for (r, c), piece in sorted(block.entries.items()):
            components.append({"degree": k, "from": c, "to": r, "matrix": piece.format_rows()})
    return {"homological_degree": f.degree, "components": components}


def equivalence_to_dict(equivalence: HomotopyEquivalence, full: bool = False) -> Dict[str, object]:
    """증인 크기 요약 (full 이면 네 사상 전체)"""
    result: Dict[str, object] = {"witness_sizes": equivalence.witness_sizes()}
    if full:
        result["forward"] = graded_map_to_dict(equivalence.forward)
        result["backward"] = graded_map_to_dict(equivalence.backward)
        result["source_homotopy"] = graded_map_to_dict(equivalence.source_homotopy)
        result["target_homotopy"] = graded_map_to_dict(equivalence.target_homotopy)
    return result


def search_to_dict(search: EquivalenceSearch, full: bool = False) -> Dict[str, object]:
    result: Dict[str, object] = {
        "found": search.found,
        "reason": search.reason,
        "method": search.method,
        "candidates_tried": search.candidates_tried,
        "lattice": list(search.lattice),
    }
    if search.class_dimension is not None:
        result["class_dimension"] = search.class_dimension
    if search.equivalence is not None:
        result.update(equivalence_to_dict(search.equivalence, full))
    return result


def hecke_to_dict(element: HeckeElement) -> Dict[str, object]:
    return {"strands": element.strands, "text": element.format(), "terms": element.to_dict()}



def document(kind: str, body: Dict[str, object]) -> Dict[str, object]:
    """스키마 버전과 종류를 붙인 최상위 문서"""
    result = {"schema": SCHEMA_VERSION, "kind": kind}
    result.update(body)
    return result


def dumps(data: Dict[str, object]) -> str:
    return json.dumps(data, sort_keys=True, ensure_ascii=False, indent=2)
