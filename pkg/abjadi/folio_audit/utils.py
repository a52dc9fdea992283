"""
폴리오 검증 유틸리티 함수
"""

from typing import Sequence

from ..number_format import group_classes
from .config import MAX_LISTED_VALUES, SEPARATOR_WIDTH


def format_number(value: int) -> str:
    """
    숫자를 세 자리 class 단위로 띄어 쓰기

    Returns:
        포맷팅된 문자열 (예: "1 225")
    """
    return group_classes(value)


def format_value_list(values: Sequence[int], limit: int = MAX_LISTED_VALUES) -> str:
    """
    번호 목록을 쉼표로 연결 (limit개 초과분은 개수만 표시)

    Example:
        >>> format_value_list([4, 23])
        '4, 23'
    """
    shown = ", ".join(format_number(v) for v in values[:limit])
    if len(values) > limit:
        shown += f" ... (외 {len(values) - limit}개)"
    return shown


def print_section_header(title: str, number: int) -> None:
    """
    섹션 헤더 출력

    Args:
        title: 섹션 제목
        number: 섹션 번호
    """
    print(f"[{number}] {title}")
    print("-" * SEPARATOR_WIDTH)
