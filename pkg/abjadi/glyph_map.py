"""
숫자 체계 음역 모듈
현대 서양 숫자, 동부 아랍 숫자(Mashriki), Ghubari 숫자 사이의 값 보존 변환과
각 숫자 모양의 기원 문자(lineage), 오독 쌍(confusion pair) 정보
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Tuple

from .abjad_core import Script
from .errors import NotADigit, OutOfRange

logger = logging.getLogger(__name__)


class NumeralSystem(str, Enum):
    """숫자 체계"""
    MODERN_WESTERN = "western"
    EASTERN_ARABIC = "eastern"
    GHUBARI = "ghubari"


# Ghubari 숫자는 유니코드가 없어 서양 숫자 문자로 표기 (체계 태그로만 구분)
DIGITS: Dict[NumeralSystem, str] = {
    NumeralSystem.MODERN_WESTERN: "0123456789",
    NumeralSystem.EASTERN_ARABIC: "٠١٢٣٤٥٦٧٨٩",
    NumeralSystem.GHUBARI: "0123456789",
}


class GhubariTransformation(str, Enum):
    """아랍 문자 → Ghubari 숫자 변형"""
    NONE = "none"
    UP_SIDE_DOWN = "up_side_down"
    DOT_MODIFICATION = "dot_modification"
    TAIL_BOUND = "tail_bound"
    FINAL_SHAPE = "final_shape"
    SAD_INITIAL = "sad_initial"


class MashrikiTransformation(str, Enum):
    """문자/Ghubari 숫자 → Mashriki 숫자 변형"""
    NONE = "none"
    LEG_FOR_DOT = "leg_for_dot"
    ROTATION_RIGHT_QUARTER = "rotation_right_quarter"
    ROTATION_LEFT_QUARTER = "rotation_left_quarter"
    UP_SIDE_DOWN = "up_side_down"
    HEBREW_BORROWING = "hebrew_borrowing"


@dataclass(frozen=True)
class SourceLetter:
    """숫자 모양의 기원 문자"""
    codepoint: str
    sound: str
    script: Script
    value: int


@dataclass(frozen=True)
class LineageRecord:
    """숫자 값 하나의 모양 계보"""
    value: int
    ghubari_source: SourceLetter
    ghubari_transformation: GhubariTransformation
    mashriki_source: SourceLetter
    mashriki_transformation: MashrikiTransformation
    modern_shape_twin: int
    note: str

    @property
    def source_letter(self) -> SourceLetter:
        """Ghubari 숫자의 기원 문자"""
        return self.ghubari_source

    @property
    def source_value(self) -> int:
        return self.ghubari_source.value

    @property
    def western_glyph(self) -> str:
        return DIGITS[NumeralSystem.MODERN_WESTERN][self.value]

    @property
    def eastern_glyph(self) -> str:
        return DIGITS[NumeralSystem.EASTERN_ARABIC][self.value]


@dataclass(frozen=True)
class ConfusionPair:
    """서로 잘못 읽힌 숫자 쌍"""
    a: Tuple[NumeralSystem, int]
    b: Tuple[NumeralSystem, int]
    note: str

    def counterpart(self, system: NumeralSystem, value: int) -> Tuple[NumeralSystem, int]:
        """(system, value)가 한쪽이면 다른 쪽 반환"""
        if (system, value) == self.a:
            return self.b
        if (system, value) == self.b:
            return self.a
        raise KeyError((system, value))


def _ar(char: str, sound: str, value: int) -> SourceLetter:
    return SourceLetter(char, sound, Script.ARABIC, value)


def _he(char: str, sound: str, value: int) -> SourceLetter:
    return SourceLetter(char, sound, Script.HEBREW, value)


_G = GhubariTransformation
_M = MashrikiTransformation

LINEAGE: Dict[int, LineageRecord] = {
    record.value: record
    for record in (
        LineageRecord(0, _ar('ص', 'Sad', 90), _G.SAD_INITIAL,
                      _he('י', 'Yodh', 10), _M.HEBREW_BORROWING, 0,
                      "Ghubari 0: ص 초형 (صفر의 첫 글자). Mashriki 0: ي는 Ghubari 2와 혼동되어 히브리어 י 차용"),
        LineageRecord(1, _ar('ا', 'Alif', 1), _G.NONE,
                      _ar('ا', 'Alif', 1), _M.NONE, 1,
                      "두 체계 모두 ا 그대로"),
        LineageRecord(2, _ar('ي', 'Yaa', 10), _G.FINAL_SHAPE,
                      _ar('ب', 'Baa', 2), _M.LEG_FOR_DOT, 2,
                      "Ghubari 2: 두 점이 있는 Maghribi ي 어말형 (값 10). Mashriki 2: ب, 점 대신 다리"),
        LineageRecord(3, _ar('ج', 'Jim', 3), _G.FINAL_SHAPE,
                      _ar('ج', 'Jim', 3), _M.ROTATION_RIGHT_QUARTER, 3,
                      "Ghubari 3: 점이 남은 ج 연결 어말형. Mashriki 3: 오른쪽 90도 회전, 점 대신 다리"),
        LineageRecord(4, _ar('د', 'Del', 4), _G.NONE,
                      _ar('د', 'Del', 4), _M.NONE, 5,
                      "Maghribi د. 현대 숫자에서는 5의 모양이 됨"),
        LineageRecord(5, _ar('ه', 'Haa', 5), _G.FINAL_SHAPE,
                      _ar('ه', 'Haa', 5), _M.NONE, 4,
                      "Ghubari 5: ه 연결 어말형 변형, 현대 숫자 4의 모양. Mashriki 5: ه 독립형"),
        LineageRecord(6, _ar('و', 'Waw', 6), _G.UP_SIDE_DOWN,
                      _he('ו', 'Vav', 6), _M.HEBREW_BORROWING, 6,
                      "Ghubari 6: 뒤집힌 و. Mashriki 6: و는 Ghubari 9와 혼동되어 히브리어 ו 차용"),
        LineageRecord(7, _ar('ز', 'Zin', 7), _G.DOT_MODIFICATION,
                      _ar('ز', 'Zin', 7), _M.LEG_FOR_DOT, 7,
                      "점이 몸통에 붙은 획으로 바뀐 ز"),
        LineageRecord(8, _ar('ح', "H'aa", 8), _G.TAIL_BOUND,
                      _ar('ح', "H'aa", 8), _M.ROTATION_LEFT_QUARTER, 8,
                      "Ghubari 8: 꼬리가 시작점에 붙은 ح 어말형. Mashriki 8: 왼쪽 90도 회전, 히브리어 ח와도 닮음"),
        LineageRecord(9, _ar('ط', "T'aa", 9), _G.UP_SIDE_DOWN,
                      _ar('ط', "T'aa", 9), _M.UP_SIDE_DOWN, 9,
                      "두 체계 모두 뒤집힌 ط"),
    )
}

CONFUSION_PAIRS: Tuple[ConfusionPair, ...] = (
    ConfusionPair((NumeralSystem.GHUBARI, 5), (NumeralSystem.EASTERN_ARABIC, 6),
                  "필사본 연도 1225의 Ghubari 5가 Mashriki 6으로 옮겨 적힘"),
    ConfusionPair((NumeralSystem.GHUBARI, 5), (NumeralSystem.MODERN_WESTERN, 4),
                  "Ghubari 5는 모양이 현대 숫자 4와 같아 4로 해석됨"),
)


def digit_value(ch: str, system: NumeralSystem) -> int:
    """
    숫자 문자 하나의 값

    Raises:
        NotADigit: 해당 체계의 숫자가 아닌 경우
    """
    system = NumeralSystem(system)
    index = DIGITS[system].find(ch) if len(ch) == 1 else -1
    if index < 0:
        raise NotADigit(ch, system.value)
    return index


def transliterate(text: str, source: NumeralSystem, target: NumeralSystem) -> str:
    """
    숫자를 같은 값의 다른 체계 숫자로 변환 (숫자가 아닌 문자는 그대로)

    Example:
        >>> transliterate("١٢٢٥", NumeralSystem.EASTERN_ARABIC, NumeralSystem.MODERN_WESTERN)
        '1225'
    """
    source = NumeralSystem(source)
    target = NumeralSystem(target)
    if source is target or DIGITS[source] == DIGITS[target]:
        return text
    return text.translate(str.maketrans(DIGITS[source], DIGITS[target]))


def parse_digits(label: str, system: NumeralSystem) -> int:
    """숫자 문자열을 정수로 변환 (모든 문자가 해당 체계의 숫자여야 함)"""
    if not label:
        raise NotADigit(label, NumeralSystem(system).value)
    value = 0
    for ch in label:
        value = value * 10 + digit_value(ch, system)
    return value


def format_digits(n: int, system: NumeralSystem) -> str:
    """정수를 해당 체계의 숫자 문자열로 변환"""
    if n < 0:
        raise OutOfRange(n, 0)
    return transliterate(str(n), NumeralSystem.MODERN_WESTERN, system)


def shape_lineage(value: int) -> LineageRecord:
    """숫자 값의 모양 계보 조회"""
    if value not in LINEAGE:
        raise OutOfRange(value, 0, 9)
    return LINEAGE[value]


def confusion_pairs() -> List[ConfusionPair]:
    """내장 오독 쌍 목록"""
    return list(CONFUSION_PAIRS)


def confusable_readings(system: NumeralSystem, value: int) -> List[Tuple[int, ConfusionPair]]:
    """
    (system, value) 숫자가 오독된 것이라면 원래 값이었을 후보

    Returns:
        (원래 값 후보, 근거가 되는 오독 쌍) 목록
    """
    system = NumeralSystem(system)
    readings = []
    for pair in CONFUSION_PAIRS:
        if (system, value) in (pair.a, pair.b):
            _, other_value = pair.counterpart(system, value)
            readings.append((other_value, pair))
    return readings
