"""
폴리오 목록 입력 파싱
한 줄에 한 장: label[TAB catchword[TAB first_word]], '#'으로 시작하는 줄은 주석
"""

import logging
from pathlib import Path
from typing import Iterable, List, Optional, Union

from ..errors import NotADigit, ParseError
from ..glyph_map import NumeralSystem, parse_digits
from .config import COMMENT_PREFIX, FIELD_SEPARATOR, MAX_FIELDS, FolioRecord

logger = logging.getLogger(__name__)


def _optional(field_value: str) -> Optional[str]:
    field_value = field_value.strip()
    return field_value or None


def parse_folios(lines: Iterable[str], system: NumeralSystem) -> List[FolioRecord]:
    """
    폴리오 목록 파싱

    Args:
        lines: 입력 줄 (줄바꿈 문자 포함 가능)
        system: 번호의 숫자 체계

    Returns:
        물리적 순서대로의 FolioRecord 목록

    Raises:
        ParseError: 형식이 잘못되었거나 번호를 읽을 수 없는 줄 (줄 번호 포함)
    """
    system = NumeralSystem(system)
    records: List[FolioRecord] = []

    for line_number, raw in enumerate(lines, start=1):
        line = raw.rstrip("\r\n")
        if not line.strip() or line.lstrip().startswith(COMMENT_PREFIX):
            continue

        fields = line.split(FIELD_SEPARATOR)
        if len(fields) > MAX_FIELDS:
            raise ParseError(f"필드가 너무 많습니다 ({len(fields)}개, 최대 {MAX_FIELDS}개)", line=line_number)

        label = fields[0].strip()
        try:
            value = parse_digits(label, system)
        except NotADigit:
            raise ParseError(f"{system.value} 숫자로 읽을 수 없는 번호: {label!r}", line=line_number) from None
        if value < 1:
            raise ParseError(f"번호는 양수여야 합니다: {label!r}", line=line_number)

        records.append(FolioRecord(
            index=len(records),
            label=label,
            system=system,
            catchword=_optional(fields[1]) if len(fields) > 1 else None,
            first_word=_optional(fields[2]) if len(fields) > 2 else None,
        ))

    logger.debug(f"폴리오 {len(records)}장 파싱 완료 ({system.value})")
    return records


def read_folio_file(path: Union[str, Path], system: NumeralSystem) -> List[FolioRecord]:
    """UTF-8 폴리오 목록 파일 읽기 (BOM 허용)"""
    with open(path, "r", encoding="utf-8-sig") as f:
        return parse_folios(f, system)
