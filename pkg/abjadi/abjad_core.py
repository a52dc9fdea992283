"""
Abjad 숫자 체계 핵심 모듈
아랍어(28자)/히브리어(22자) Abjad 값 표, 텍스트 정규화, 정수 ↔ 문자 단어 변환, Guematria 계산
"""

import logging
import unicodedata
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from types import MappingProxyType
from typing import Dict, FrozenSet, List, Literal, Mapping, Optional, Tuple

import regex

from .config import get_config
from .errors import (
    DuplicateClass,
    NonCanonical,
    OutOfRange,
    ParseError,
    UnknownLetter,
    UnrepresentableClass,
)
from .number_format import split_classes

logger = logging.getLogger(__name__)


class Script(str, Enum):
    """문자 체계"""
    ARABIC = "arabic"
    HEBREW = "hebrew"


# (문자, 발음, Abjad 값) - Abjad 순서
ARABIC_LETTERS = [
    ('ا', 'Alif', 1), ('ب', 'Baa', 2), ('ج', 'Jim', 3), ('د', 'Del', 4),
    ('ه', 'Haa', 5), ('و', 'Waw', 6), ('ز', 'Zin', 7), ('ح', "H'aa", 8),
    ('ط', "T'aa", 9), ('ي', 'Yaa', 10), ('ك', 'Kef', 20), ('ل', 'Lem', 30),
    ('م', 'Mim', 40), ('ن', 'Noun', 50), ('س', 'Sin', 60), ('ع', "A'in", 70),
    ('ف', 'Faa', 80), ('ص', 'Sad', 90), ('ق', "K'af", 100), ('ر', 'Raa', 200),
    ('ش', 'Shin', 300), ('ت', 'Taa', 400), ('ث', 'Thaa', 500), ('خ', "Kh'aa", 600),
    ('ذ', 'Dhel', 700), ('ض', 'Dzad', 800), ('ظ', 'Dzaa', 900), ('غ', 'Ghin', 1000),
]

HEBREW_LETTERS = [
    ('א', 'Aleph', 1), ('ב', 'Beth', 2), ('ג', 'Gimel', 3), ('ד', 'Daleth', 4),
    ('ה', 'He', 5), ('ו', 'Vav', 6), ('ז', 'Zayin', 7), ('ח', 'Cheth', 8),
    ('ט', 'Teth', 9), ('י', 'Yodh', 10), ('כ', 'Kaph', 20), ('ל', 'Lamedh', 30),
    ('מ', 'Mem', 40), ('נ', 'Nun', 50), ('ס', 'Samek', 60), ('ע', 'Ayin', 70),
    ('פ', 'Fe', 80), ('צ', 'Tsahde', 90), ('ק', "Q'oph", 100), ('ר', 'Regh', 200),
    ('ש', 'Sin Shin', 300), ('ת', 'Tav', 400),
]

# 기본 문자 → 같은 값으로 접히는 변형 문자
ARABIC_VARIANTS = {
    'ا': 'أإآٱ',   # 함자/마다/와슬라
    'و': 'ؤ',
    'ي': 'ىئ',
}
TA_MARBUTA = 'ة'
TA_MARBUTA_TARGET = {"haa": 'ه', "taa": 'ت'}

HEBREW_VARIANTS = {
    'כ': 'ך',
    'מ': 'ם',
    'נ': 'ן',
    'פ': 'ף',
    'צ': 'ץ',
}

ABJADI_VALUES = frozenset(
    list(range(1, 10)) + list(range(10, 100, 10)) + list(range(100, 1000, 100)) + [1000]
)

# 결합 기호(하라카트, 니쿠드 등)와 타트윌
_MARKS = regex.compile(r"[\p{Mn}\u0640]")
_TOKEN = regex.compile(r"[()]|[^\s()]+")

GuematriaMode = Literal["lenient", "strict"]


@dataclass(frozen=True)
class ScriptProfile:
    """문자 체계별 표기 규칙"""
    letters: Tuple[Tuple[str, str, int], ...]
    single_word_max: int
    class_max: int
    conjunction: str
    multiplier: str
    expected_count: int
    kept_variants: FrozenSet[str] = frozenset()


PROFILES: Dict[Script, ScriptProfile] = {
    Script.ARABIC: ScriptProfile(
        letters=tuple(ARABIC_LETTERS),
        single_word_max=1999,
        class_max=999,
        conjunction='و',
        multiplier='ألف',
        expected_count=28,
    ),
    Script.HEBREW: ScriptProfile(
        letters=tuple(HEBREW_LETTERS),
        single_word_max=499,
        class_max=499,
        conjunction='ו',
        multiplier='אלף',
        expected_count=22,
        kept_variants=frozenset("ךםןףץ"),
    ),
}


@dataclass(frozen=True)
class AbjadLetter:
    """Abjad 문자 한 개"""
    codepoint: str
    sound: str
    value: int
    order: int
    script: Script
    variant_codepoints: FrozenSet[str] = field(default_factory=frozenset)


@dataclass(frozen=True)
class AbjadTable:
    """문자 체계별 Abjad 값 표 (읽기 전용)"""
    script: Script
    letters: Tuple[AbjadLetter, ...]
    by_value: Mapping[int, AbjadLetter]
    by_codepoint: Mapping[str, AbjadLetter]
    fold_map: Mapping[int, str]
    multiplier_key: str

    @property
    def profile(self) -> ScriptProfile:
        return PROFILES[self.script]

    @property
    def single_word_max(self) -> int:
        return self.profile.single_word_max

    @property
    def conjunction(self) -> str:
        return self.profile.conjunction

    @property
    def multiplier(self) -> str:
        return self.profile.multiplier


def _resolve_ta_marbuta(script: Script, ta_marbuta: Optional[str]) -> Optional[str]:
    if script is not Script.ARABIC:
        return None
    if ta_marbuta is None:
        ta_marbuta = get_config('normalization.ta_marbuta', 'haa')
    if ta_marbuta not in TA_MARBUTA_TARGET:
        raise ValueError(f"ta_marbuta 값이 잘못되었습니다: {ta_marbuta!r}")
    return ta_marbuta


def _build_fold_map(by_codepoint: Mapping[str, AbjadLetter], kept: FrozenSet[str]) -> Dict[int, str]:
    """
    정규화용 str.translate 표

    변형 문자는 기본 문자로, 표 문자로 분해되는 표시형은 기본 문자열로 접습니다.
    히브리어 어말형(kept)은 그대로 둡니다.
    """
    def fold(char: str) -> str:
        return char if char in kept else by_codepoint[char].codepoint

    fold_map = {
        ord(char): letter.codepoint
        for char, letter in by_codepoint.items()
        if char != letter.codepoint and char not in kept
    }
    for code in [*range(0xFB1D, 0xFE00), *range(0xFE70, 0xFF00)]:
        base = _MARKS.sub("", unicodedata.normalize("NFKC", chr(code)))
        if base and all(c in by_codepoint for c in base):
            fold_map[code] = "".join(fold(c) for c in base)
    return fold_map


@lru_cache(maxsize=None)
def _build_table(script: Script, ta_marbuta: Optional[str]) -> AbjadTable:
    profile = PROFILES[script]
    if script is Script.ARABIC:
        variants = {base: set(forms) for base, forms in ARABIC_VARIANTS.items()}
        variants.setdefault(TA_MARBUTA_TARGET[ta_marbuta], set()).add(TA_MARBUTA)
    else:
        variants = {base: set(forms) for base, forms in HEBREW_VARIANTS.items()}

    letters = tuple(
        AbjadLetter(
            codepoint=char,
            sound=sound,
            value=value,
            order=order,
            script=script,
            variant_codepoints=frozenset(variants.get(char, ())),
        )
        for order, (char, sound, value) in enumerate(profile.letters, start=1)
    )

    by_value = {letter.value: letter for letter in letters}
    by_codepoint = {}
    for letter in letters:
        by_codepoint[letter.codepoint] = letter
        for variant in letter.variant_codepoints:
            by_codepoint[variant] = letter

    # 표 무결성 검증
    values = [letter.value for letter in letters]
    expected = {v for v in ABJADI_VALUES if v <= max(values)}
    if len(letters) != profile.expected_count or set(values) != expected or values != sorted(values):
        raise RuntimeError(f"{script.value} Abjad 표가 손상되었습니다")

    fold_map = _build_fold_map(by_codepoint, profile.kept_variants)
    logger.debug(f"{script.value} Abjad 표 생성: {len(letters)}개 문자, 변형 {len(by_codepoint) - len(letters)}개, "
                 f"정규화 항목 {len(fold_map)}개")
    return AbjadTable(
        script=script,
        letters=letters,
        by_value=MappingProxyType(by_value),
        by_codepoint=MappingProxyType(by_codepoint),
        fold_map=MappingProxyType(fold_map),
        multiplier_key="".join(by_codepoint[c].codepoint for c in profile.multiplier),
    )


def load_table(script: Script, ta_marbuta: Optional[str] = None) -> AbjadTable:
    """
    Abjad 값 표 로드

    Args:
        script: 문자 체계
        ta_marbuta: ة의 값 ("haa" → 5, "taa" → 400, None이면 설정값)

    Returns:
        AbjadTable (캐시된 불변 객체)
    """
    script = Script(script)
    return _build_table(script, _resolve_ta_marbuta(script, ta_marbuta))


def _normalize(text: str, table: AbjadTable) -> str:
    return _MARKS.sub("", text.translate(table.fold_map))


def normalize(text: str, script: Script, ta_marbuta: Optional[str] = None) -> str:
    """
    텍스트 정규화

    결합 기호와 타트윌 제거, 변형 문자(함자 형태, 표시형)를 기본 문자로 접습니다.
    히브리어 어말형과 표에 없는 문자는 그대로 둡니다.
    """
    if not text:
        return ""
    return _normalize(text, load_table(script, ta_marbuta))


def value_of(letter: str, script: Script, ta_marbuta: Optional[str] = None) -> int:
    """
    문자 한 개의 Abjad 값

    Raises:
        UnknownLetter: 표에 없고 변형 문자도 아닌 경우
    """
    table = load_table(script, ta_marbuta)
    found = table.by_codepoint.get(letter)
    if found is None and letter:
        normalized = _normalize(letter, table)
        if len(normalized) == 1:
            found = table.by_codepoint.get(normalized)
    if found is None:
        raise UnknownLetter(letter, table.script.value)
    return found.value


def _decompose(v: int, table: AbjadTable) -> List[int]:
    if v < 1 or v > table.single_word_max:
        raise OutOfRange(v, 1, table.single_word_max)

    values = []
    place = 1
    rest = v
    while rest:
        rest, digit = divmod(rest, 10)
        if digit:
            values.append(digit * place)
        place *= 10
    return values


def decompose_class(v: int, script: Script) -> List[int]:
    """
    한 단어로 표현할 수를 Abjad 값들로 분해 (일의 자리부터)

    Example:
        >>> decompose_class(1245, Script.ARABIC)
        [5, 40, 200, 1000]
    """
    return _decompose(v, load_table(script))


def _encode_word(v: int, table: AbjadTable) -> str:
    return "".join(table.by_value[value].codepoint for value in _decompose(v, table))


def encode_class_word(v: int, script: Script) -> str:
    """한 단어 표기 (논리 순서는 일의 자리부터)"""
    return _encode_word(v, load_table(script))


def _place(value: int) -> int:
    return len(str(value)) - 1


def _decode_word(word: str, table: AbjadTable, strict: bool) -> int:
    normalized = _normalize(word, table)
    if not normalized:
        raise ParseError(f"빈 클래스 단어: {word!r}")

    values = []
    for position, char in enumerate(normalized):
        letter = table.by_codepoint.get(char)
        if letter is None:
            raise UnknownLetter(char, table.script.value, position)
        values.append(letter.value)

    if strict:
        places = [_place(value) for value in values]
        if any(a >= b for a, b in zip(places, places[1:])):
            raise NonCanonical(word, values)
    return sum(values)


def decode_class_word(word: str, script: Script, strict: bool = False,
                      ta_marbuta: Optional[str] = None) -> int:
    """
    클래스 단어의 값 (문자 값의 합)

    Args:
        word: 문자 단어
        script: 문자 체계
        strict: True면 자리마다 한 글자, 값이 증가하는 순서(정규형)만 허용

    Raises:
        UnknownLetter, NonCanonical (strict 모드), ParseError (빈 단어)
    """
    return _decode_word(word, load_table(script, ta_marbuta), strict)


@dataclass(frozen=True)
class ClassGroup:
    """3자리 클래스와 배수 지수 (0 = 일, 1 = alf, 2 = alf alf, ...)"""
    class_value: int
    exponent: int


@dataclass(frozen=True)
class NumberExpression:
    """클래스 그룹 목록으로 표현한 수 (지수 오름차순)"""
    groups: Tuple[ClassGroup, ...]
    script: Script

    def __post_init__(self):
        if not self.groups:
            raise ParseError("클래스가 없는 수 표현")
        exponents = [group.exponent for group in self.groups]
        if any(a >= b for a, b in zip(exponents, exponents[1:])):
            raise ParseError(f"클래스 지수는 증가 순서여야 합니다: {exponents}")
        profile = PROFILES[Script(self.script)]
        limit = profile.single_word_max if len(self.groups) == 1 else 999
        for group in self.groups:
            if group.exponent < 0 or not 1 <= group.class_value <= limit:
                raise ParseError(f"클래스 값이 범위를 벗어났습니다: {group.class_value} (허용 1..{limit})")

    @property
    def value(self) -> int:
        return sum(group.class_value * 1000 ** group.exponent for group in self.groups)

    @classmethod
    def from_int(cls, n: int, script: Script) -> "NumberExpression":
        """정수를 클래스 그룹으로 분할"""
        table = load_table(script)
        if n < 1:
            raise OutOfRange(n, 1)
        if n <= table.single_word_max:
            return cls((ClassGroup(n, 0),), table.script)

        groups = []
        for exponent, class_value in enumerate(split_classes(n)):
            if class_value == 0:
                continue
            if class_value > table.profile.class_max:
                raise UnrepresentableClass(class_value, exponent, table.script.value)
            groups.append(ClassGroup(class_value, exponent))
        return cls(tuple(groups), table.script)

    def render(self) -> str:
        """클래스 단어 + 배수 단어를 접속사로 연결"""
        table = load_table(self.script)
        words = []
        for group in self.groups:
            word = _encode_word(group.class_value, table)
            if group.exponent:
                word = " ".join([word] + [table.multiplier] * group.exponent)
            words.append(word)
        return f" {table.conjunction} ".join(words)


def encode_number(n: int, script: Script) -> str:
    """
    정수를 Abjad 문자 표기로 변환

    Example:
        >>> encode_number(1000005, Script.ARABIC)
        'ه و ا ألف ألف'
    """
    expression = NumberExpression.from_int(n, script)
    if logger.isEnabledFor(logging.DEBUG):
        logger.debug(f"encode_number({n}) 클래스: {[(g.class_value, g.exponent) for g in expression.groups]}")
    return expression.render()


def _letter_key(text: str, table: AbjadTable) -> str:
    """어말형까지 기본 문자로 접은 비교용 키"""
    return "".join(
        table.by_codepoint[c].codepoint if c in table.by_codepoint else c
        for c in _normalize(text, table)
    )


def parse_expression(text: str, script: Script, strict: bool = False,
                     ta_marbuta: Optional[str] = None) -> NumberExpression:
    """
    수 표현 파싱

    문법: 표현 := 그룹 (접속사 그룹)*, 그룹 := 단어 (배수 | "(" 배수+ ")")*
    단어 위치의 단독 و/ו 는 값 6인 문자, 그룹 뒤 위치에서는 접속사입니다.

    Raises:
        ParseError, DuplicateClass, UnknownLetter, NonCanonical (strict 모드)
    """
    table = load_table(script, ta_marbuta)
    tokens = _TOKEN.findall(text)
    if not tokens:
        raise ParseError("빈 수 표현")

    def is_multiplier(token: str) -> bool:
        return token == table.multiplier or _letter_key(token, table) == table.multiplier_key

    classes: Dict[int, int] = {}
    pos = 0
    while True:
        if pos >= len(tokens):
            raise ParseError("접속사 뒤에 클래스 단어가 없습니다")
        word = tokens[pos]
        if word in "()":
            raise ParseError(f"클래스 단어 위치에 괄호가 있습니다 (토큰 {pos})")
        class_value = _decode_word(word, table, strict)
        pos += 1

        exponent = 0
        while pos < len(tokens):
            token = tokens[pos]
            if is_multiplier(token):
                exponent += 1
                pos += 1
            elif token == "(":
                close = pos + 1
                while close < len(tokens) and is_multiplier(tokens[close]):
                    close += 1
                if close == pos + 1 or close >= len(tokens) or tokens[close] != ")":
                    raise ParseError(f"괄호 안에는 배수 단어만 올 수 있습니다 (토큰 {pos})")
                exponent += close - pos - 1
                pos = close + 1
            else:
                break

        if exponent in classes:
            raise DuplicateClass(exponent)
        classes[exponent] = class_value

        if pos >= len(tokens):
            break
        conjunction = tokens[pos]
        if conjunction != table.conjunction and _normalize(conjunction, table) != table.conjunction:
            raise ParseError(f"접속사 {table.conjunction}가 필요합니다: {tokens[pos]!r} (토큰 {pos})")
        pos += 1

    groups = tuple(ClassGroup(classes[e], e) for e in sorted(classes))
    return NumberExpression(groups, table.script)


def decode_number(text: str, script: Script, strict: bool = False,
                  ta_marbuta: Optional[str] = None) -> int:
    """
    Abjad 문자 표기를 정수로 변환 (배수 단어의 괄호 표기 허용)

    Example:
        >>> decode_number("طفذ و ونت (ألف) و جك (ألف ألف)", Script.ARABIC)
        23456789
    """
    return parse_expression(text, script, strict, ta_marbuta).value


def letter_terms(text: str, script: Script, mode: GuematriaMode = "lenient",
                 ta_marbuta: Optional[str] = None) -> List[Tuple[str, int]]:
    """
    Guematria 계산 항목 (정규화된 문자, 값) 목록

    Raises:
        UnknownLetter: strict 모드에서 값이 없는 문자(공백, 구두점, 숫자 포함)
    """
    if mode not in ("lenient", "strict"):
        raise ValueError(f"알 수 없는 모드: {mode!r}")
    table = load_table(script, ta_marbuta)
    terms = []
    for position, char in enumerate(_normalize(text, table)):
        letter = table.by_codepoint.get(char)
        if letter is None:
            if mode == "strict":
                raise UnknownLetter(char, table.script.value, position)
            continue
        terms.append((letter.codepoint, letter.value))
    return terms


def guematria(text: str, script: Script, mode: GuematriaMode = "lenient",
              ta_marbuta: Optional[str] = None) -> int:
    """
    텍스트의 Abjad 값 합계 (Hisseb el-joummel)

    Example:
        >>> guematria("احمد زينب", Script.ARABIC)
        122
    """
    return sum(value for _, value in letter_terms(text, script, mode, ta_marbuta))
