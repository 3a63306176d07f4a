"""
보트-사멜슨 단어와 브레이드 단어

텍스트 표기:
    BSWord     "n:[i_k,…,i_1]:shift"      예) "3:[1,2]:0"
    BraidWord  "s1 s2 s1'"                 (프라임 = 역원), 가닥 수는 따로 지정
"""

import re
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from common.enums import CrossingSign

from .errors import WordParseError
from .value_objects import Permutation


@dataclass(frozen=True)
class BSWord:
    """이동된 보트-사멜슨 단어 B_{i_k}…B_{i_1}⟨shift⟩ (왼쪽 글자가 왼쪽 텐서 인자)"""

    strands: int
    letters: Tuple[int, ...] = ()
    shift: int = 0

    def __post_init__(self):
        if self.strands < 0:
            raise ValueError(f"가닥 수는 0 이상이어야 합니다: {self.strands}")
        for i in self.letters:
            if not 1 <= i <= self.strands - 1:
                raise ValueError(f"글자가 범위를 벗어났습니다: {i} (n={self.strands})")

    @classmethod
    def empty(cls, strands: int, shift: int = 0) -> "BSWord":
        return cls(strands, (), shift)

    @property
    def length(self) -> int:
        return len(self.letters)

    def shifted(self, amount: int) -> "BSWord":
        return BSWord(self.strands, self.letters, self.shift + amount)

    def concat(self, other: "BSWord") -> "BSWord":
        """⊗_R: 글자 이어붙이기, 이동량 합"""
        if self.strands != other.strands:
            raise ValueError(f"가닥 수가 다른 단어입니다: {self.strands} != {other.strands}")
        return BSWord(self.strands, self.letters + other.letters, self.shift + other.shift)

    def external(self, other: "BSWord") -> "BSWord":
        """⊠: 두 번째 단어의 글자를 self.strands 만큼 밀어 붙입니다."""
        moved = tuple(i + self.strands for i in other.letters)
        return BSWord(self.strands + other.strands, self.letters + moved, self.shift + other.shift)

    def embedded(self, offset: int, total: int) -> "BSWord":
        """1_offset ⊠ self ⊠ 1_rest"""
        if offset < 0 or offset + self.strands > total:
            raise ValueError(f"단어를 끼워 넣을 수 없습니다: offset={offset}, total={total}")
        return BSWord(total, tuple(i + offset for i in self.letters), self.shift)

    def format(self) -> str:
        return f"{self.strands}:[{','.join(str(i) for i in self.letters)}]:{self.shift}"

    def __str__(self) -> str:
        return self.format()


@dataclass(frozen=True)
class BraidLetter:
    """브레이드 생성원 σ_i^{±1}"""

    index: int
    sign: CrossingSign = CrossingSign.POSITIVE

    def __post_init__(self):
        if self.index < 1:
            raise ValueError(f"생성원 번호는 1 이상이어야 합니다: {self.index}")

    @property
    def positive(self) -> bool:
        return self.sign is CrossingSign.POSITIVE

    def inverse(self) -> "BraidLetter":
        return BraidLetter(self.index, self.sign.inverted())

    def moved(self, offset: int) -> "BraidLetter":
        return BraidLetter(self.index + offset, self.sign)

    def format(self) -> str:
        return f"s{self.index}" + ("" if self.positive else "'")


@dataclass(frozen=True)
class BraidWord:
    """가닥 수 n 의 브레이드 단어 (왼쪽에서 오른쪽으로 ⋆ 곱)"""

    strands: int
    letters: Tuple[BraidLetter, ...] = ()

    def __post_init__(self):
        if self.strands < 0:
            raise ValueError(f"가닥 수는 0 이상이어야 합니다: {self.strands}")
        for letter in self.letters:
            if not 1 <= letter.index <= self.strands - 1:
                raise ValueError(f"생성원이 범위를 벗어났습니다: s{letter.index} (n={self.strands})")

    @classmethod
    def positive(cls, strands: int, indices: Sequence[int]) -> "BraidWord":
        return cls(strands, tuple(BraidLetter(i) for i in indices))

    @classmethod
    def negative(cls, strands: int, indices: Sequence[int]) -> "BraidWord":
        return cls(strands, tuple(BraidLetter(i, CrossingSign.NEGATIVE) for i in indices))

    @property
    def length(self) -> int:
        return len(self.letters)

    def __add__(self, other: "BraidWord") -> "BraidWord":
        if self.strands != other.strands:
            raise ValueError(f"가닥 수가 다른 단어입니다: {self.strands} != {other.strands}")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        """뒤집고 부호를 바꾼 단어"""
        return BraidWord(self.strands, tuple(letter.inverse() for letter in reversed(self.letters)))

    def embedded(self, offset: int, total: int) -> "BraidWord":
        if offset < 0 or offset + self.strands > total:
            raise ValueError(f"단어를 끼워 넣을 수 없습니다: offset={offset}, total={total}")
        return BraidWord(total, tuple(letter.moved(offset) for letter in self.letters))

    def permutation(self) -> Permutation:
        """밑에 놓인 순열 (부호 무시)"""
        return Permutation.from_word([letter.index for letter in self.letters], self.strands)

    def format(self) -> str:
        return " ".join(letter.format() for letter in self.letters)

    def __str__(self) -> str:
        return self.format()


_BRAID_TOKEN = re.compile(r"[sσ](\d+)('|\^-1)?")
_BS_WORD = re.compile(r"^\s*(\d+)\s*:\s*\[([^\]]*)\]\s*(?::\s*(-?\d+)\s*)?$")


def parse_braid(text: str, strands: int) -> BraidWord:
    """'s1 s2 s1'' 형태의 브레이드 단어를 읽습니다. 여러 행이면 이어붙입니다.

    Raises:
        WordParseError: 위치(행/열)와 사유 코드를 포함
    """
    letters: List[BraidLetter] = []
    for line_number, line in enumerate(text.splitlines() or [""], start=1):
        pos = 0
        while pos < len(line):
            if line[pos].isspace() or line[pos] in ",.":
                pos += 1
                continue
            match = _BRAID_TOKEN.match(line, pos)
            if match is None:
                raise WordParseError(f"브레이드 글자를 해석할 수 없습니다: '{line[pos]}'", line_number, pos + 1, "UNEXPECTED_CHAR")
            index = int(match.group(1))
            if not 1 <= index <= strands - 1:
                raise WordParseError(
                    f"생성원 s{index} 가 {strands} 가닥 범위를 벗어났습니다", line_number, pos + 1, "INDEX_OUT_OF_RANGE"
                )
            sign = CrossingSign.NEGATIVE if match.group(2) else CrossingSign.POSITIVE
            letters.append(BraidLetter(index, sign))
            pos = match.end()
    return BraidWord(strands, tuple(letters))


def parse_bs_word(text: str, line: int = 1) -> BSWord:
    """'n:[i_k,…,i_1]:shift' 형태를 읽습니다 (shift 생략 시 0)."""
    match = _BS_WORD.match(text)
    if match is None:
        raise WordParseError(f"단어 형식이 'n:[..]:shift' 가 아닙니다: {text!r}", line, 1, "UNEXPECTED_CHAR")
    strands = int(match.group(1))
    body = match.group(2)
    letters = []
    column = text.index("[") + 2
    for chunk in body.split(","):
        stripped = chunk.strip()
        if stripped:
            if not stripped.isdigit():
                raise WordParseError(f"글자가 정수가 아닙니다: {stripped!r}", line, column, "BAD_INDEX")
            index = int(stripped)
            if not 1 <= index <= strands - 1:
                raise WordParseError(f"글자 {index} 가 {strands} 가닥 범위를 벗어났습니다", line, column, "INDEX_OUT_OF_RANGE")
            letters.append(index)
        column += len(chunk) + 1
    shift = int(match.group(3)) if match.group(3) is not None else 0
    return BSWord(strands, tuple(letters), shift)
