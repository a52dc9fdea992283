"""
오른쪽-왼쪽(right-left) 숫자 읽기 모듈
3자리 클래스 묶음과 일의 자리부터 읽는 방식의 숫자 표기
"""

import logging
import re
from dataclasses import dataclass
from typing import List, Tuple

from .errors import OutOfRange, ParseError

logger = logging.getLogger(__name__)

PLACE_NAMES = ("units", "tens", "hundreds")
THOUSAND = "thousand"
MILLION = "million"
CLASS_SEPARATOR = " and "
SEMICOLON_SEPARATOR = "; "


@dataclass(frozen=True)
class ClassReading:
    """한 클래스(3자리)의 읽기: 일의 자리부터 0이 아닌 자리값"""
    parts: Tuple[Tuple[int, str], ...]
    class_multiplier: str
    exponent: int

    @property
    def values(self) -> List[int]:
        return [value for value, _ in self.parts]

    @property
    def class_value(self) -> int:
        return sum(self.values)


def split_classes(n: int) -> List[int]:
    """
    3자리 클래스로 분할 (일의 클래스부터)

    Example:
        >>> split_classes(23456789)
        [789, 456, 23]
    """
    if n < 0:
        raise OutOfRange(n, 0)
    if n == 0:
        return [0]
    classes = []
    while n:
        n, class_value = divmod(n, 1000)
        classes.append(class_value)
    return classes


def multiplier_name(exponent: int) -> str:
    """
    클래스 지수의 배수 이름

    천(thousand), 백만(million) 이후로는 "alf alf" 방식대로 thousand를 앞에 반복합니다.
    0 → "", 1 → "thousand", 2 → "million", 3 → "thousand million", ...
    """
    if exponent < 0:
        raise OutOfRange(exponent, 0)
    if exponent == 0:
        return ""
    if exponent == 1:
        return THOUSAND
    return " ".join([THOUSAND] * (exponent - 2) + [MILLION])


def multiplier_exponent(name: str) -> int:
    """multiplier_name의 역함수"""
    # 복수형(thousands, millions)도 허용
    words = [w[:-1] if w in (THOUSAND + "s", MILLION + "s") else w for w in name.split()]
    if not words:
        return 0
    if words == [THOUSAND]:
        return 1
    if words[-1] == MILLION and all(w == THOUSAND for w in words[:-1]):
        return len(words) + 1
    raise ParseError(f"알 수 없는 배수 이름: {name!r}")


def group_classes(n: int) -> str:
    """
    오른쪽부터 3자리씩 공백으로 구분

    Example:
        >>> group_classes(12457892)
        '12 457 892'
    """
    if n < 0:
        raise OutOfRange(n, 0)
    return f"{n:,}".replace(",", " ")


def class_readings(n: int) -> List[ClassReading]:
    """0이 아닌 클래스의 읽기 목록 (일의 클래스부터)"""
    if n < 1:
        raise OutOfRange(n, 1)
    readings = []
    for exponent, class_value in enumerate(split_classes(n)):
        if class_value == 0:
            continue
        parts = []
        for place, place_name in enumerate(PLACE_NAMES):
            digit = (class_value // 10 ** place) % 10
            if digit:
                parts.append((digit * 10 ** place, place_name))
        readings.append(ClassReading(tuple(parts), multiplier_name(exponent), exponent))
    return readings


def verbalize_rl(n: int, class_separator: str = CLASS_SEPARATOR) -> str:
    """
    오른쪽-왼쪽 논리의 한 단계 읽기

    Args:
        n: 양의 정수
        class_separator: 클래스 사이 구분자 (기본 " and ", SEMICOLON_SEPARATOR는 "; ")

    Returns:
        예: "2 and 90 and 800 and 7 and 50 and 400 thousand and 2 and 10 million"
    """
    chunks = []
    for reading in class_readings(n):
        text = " and ".join(str(value) for value in reading.values)
        if reading.class_multiplier:
            text = f"{text} {reading.class_multiplier}"
        chunks.append(text)
    return class_separator.join(chunks)


def verbalize_lr(n: int) -> str:
    """
    왼쪽-오른쪽 논리의 두 번째 단계 읽기

    Example:
        >>> verbalize_lr(12457892)
        '12 million 457 thousand 892'
    """
    chunks = []
    for reading in reversed(class_readings(n)):
        text = str(reading.class_value)
        if reading.class_multiplier:
            text = f"{text} {reading.class_multiplier}"
        chunks.append(text)
    return " ".join(chunks)


_CHUNK_PATTERN = re.compile(r"^(\d+)(?:\s+([a-z ]+))?$")


def read_rl(text: str) -> int:
    """
    verbalize_rl 출력을 다시 정수로 읽기

    클래스 경계: "; " 구분자, 배수 이름, 또는 값이 증가하지 않는 지점.
    " and " 구분만 있는 경우 경계가 모호할 수 있습니다 (예: 90002 → "2 and 90 thousand").
    """
    text = text.strip()
    if not text:
        raise ParseError("빈 읽기 문자열")

    total = 0
    for segment in text.split(";"):
        pending: List[int] = []
        for chunk in segment.split(" and "):
            chunk = chunk.strip()
            match = _CHUNK_PATTERN.match(chunk)
            if not match:
                raise ParseError(f"읽을 수 없는 항목: {chunk!r}")
            value = int(match.group(1))
            if pending and value <= pending[-1]:
                # 값이 증가하지 않으면 새 클래스 (앞 클래스는 일의 클래스)
                total += sum(pending)
                pending = []
            pending.append(value)
            if match.group(2):
                total += sum(pending) * 1000 ** multiplier_exponent(match.group(2).strip())
                pending = []
        total += sum(pending)
    logger.debug(f"read_rl: {text!r} → {total}")
    return total
