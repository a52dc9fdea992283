"""
Abjadi Numerals Package
아랍어/히브리어 Abjad 숫자 체계 변환, Guematria 계산, 숫자 체계 음역 및 필사본 폴리오 검증
"""

__version__ = "1.0.0"

from .abjad_core import (
    Script,
    load_table,
    normalize,
    value_of,
    decompose_class,
    encode_class_word,
    decode_class_word,
    encode_number,
    decode_number,
    parse_expression,
    letter_terms,
    guematria,
)
from .glyph_map import NumeralSystem, digit_value, transliterate, shape_lineage, confusion_pairs
from .number_format import group_classes, verbalize_rl, verbalize_lr, read_rl

__all__ = [
    'Script',
    'load_table',
    'normalize',
    'value_of',
    'decompose_class',
    'encode_class_word',
    'decode_class_word',
    'encode_number',
    'decode_number',
    'parse_expression',
    'letter_terms',
    'guematria',
    'NumeralSystem',
    'digit_value',
    'transliterate',
    'shape_lineage',
    'confusion_pairs',
    'group_classes',
    'verbalize_rl',
    'verbalize_lr',
    'read_rl',
]
