"""
검사 보고서 DTO 정의

JSON 출력은 정렬된 키와 결정적인 값만 담습니다. 소요 시간은
timings 를 켰을 때만 포함합니다.
"""

from dataclasses import dataclass, field
from typing import Dict, Tuple

from common.enums import Verdict
from constants import REASON_OK, SCHEMA_VERSION


@dataclass(frozen=True)
class CheckReport:
    """검사 하나의 판정"""

    name: str
    verdict: Verdict
    reason: str = REASON_OK
    details: Dict[str, object] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.verdict is Verdict.PASS

    def to_dict(self, timings: bool = False) -> Dict[str, object]:
        result = {
            "name": self.name,
            "verdict": self.verdict.name,
            "reason": self.reason,
            "details": self.details,
        }
        if timings:
            result["elapsed"] = round(self.elapsed, 3)
        return result

    @classmethod
    def from_dict(cls, data: Dict[str, object]) -> "CheckReport":
        """캐시에서 되살린 보고서"""
        try:
            verdict = Verdict[data["verdict"]]
        except KeyError as e:
            raise ValueError(f"보고서 형식이 잘못되었습니다: {e}")
        return cls(
            str(data["name"]),
            verdict,
            str(data.get("reason", REASON_OK)),
            dict(data.get("details", {})),
            float(data.get("elapsed", 0.0)),
        )


@dataclass(frozen=True)
class SuiteReport:
    """스위트 하나의 검사들 (제출 순서 유지)"""

    suite: str
    checks: Tuple[CheckReport, ...]
    config: Dict[str, object] = field(default_factory=dict)

    @property
    def verdict(self) -> Verdict:
        return Verdict.combine(check.verdict for check in self.checks)

    def counts(self) -> Dict[str, int]:
        counts = {verdict.name: 0 for verdict in Verdict}
        for check in self.checks:
            counts[check.verdict.name] += 1
        return counts

    def to_dict(self, timings: bool = False) -> Dict[str, object]:
        return {
            "schema": SCHEMA_VERSION,
            "suite": self.suite,
            "verdict": self.verdict.name,
            "counts": self.counts(),
            "config": self.config,
            "checks": [check.to_dict(timings) for check in self.checks],
        }
