"""
Abjad 값 표, 정규화, 정수 ↔ 문자 변환, Guematria 테스트
"""

import random
import time

import pytest
from hypothesis import given, settings, strategies as st

from abjadi import abjad_core
from abjadi.abjad_core import (
    ABJADI_VALUES,
    NumberExpression,
    Script,
    decode_class_word,
    decode_number,
    decompose_class,
    encode_class_word,
    encode_number,
    guematria,
    letter_terms,
    load_table,
    normalize,
    parse_expression,
    value_of,
)
from abjadi.config import get_config, load_config
from abjadi.errors import (
    AbjadError,
    DuplicateClass,
    NonCanonical,
    OutOfRange,
    ParseError,
    UnknownLetter,
    UnrepresentableClass,
)

ARABIC = Script.ARABIC
HEBREW = Script.HEBREW

arabic_letters = st.text(alphabet=[letter.codepoint for letter in load_table(ARABIC).letters])


# ---------------------------------------------------------------------------
# 값 표
# ---------------------------------------------------------------------------


def test_arabic_table_has_28_letters_summing_to_5995():
    table = load_table(ARABIC)
    assert len(table.letters) == 28
    assert sum(letter.value for letter in table.letters) == 5995
    assert {letter.value for letter in table.letters} == set(ABJADI_VALUES)


def test_hebrew_table_stops_at_400():
    table = load_table(HEBREW)
    assert len(table.letters) == 22
    assert max(letter.value for letter in table.letters) == 400
    assert {letter.value for letter in table.letters} == {v for v in ABJADI_VALUES if v <= 400}


@pytest.mark.parametrize("script", [ARABIC, HEBREW])
def test_order_increases_with_value(script):
    letters = load_table(script).letters
    assert [letter.order for letter in letters] == list(range(1, len(letters) + 1))
    assert [letter.value for letter in letters] == sorted(letter.value for letter in letters)


@pytest.mark.parametrize("script", [ARABIC, HEBREW])
def test_lookups_are_consistent(script):
    table = load_table(script)
    for letter in table.letters:
        assert table.by_value[letter.value] is letter
        assert table.by_codepoint[letter.codepoint] is letter
        for variant in letter.variant_codepoints:
            assert table.by_codepoint[variant] is letter


def test_table_lookups_by_value():
    assert load_table(ARABIC).by_value[3].codepoint == 'ج'
    assert load_table(ARABIC).by_value[3].sound == 'Jim'
    assert load_table(HEBREW).by_value[400].codepoint == 'ת'


def test_table_is_read_only():
    table = load_table(ARABIC)
    with pytest.raises(TypeError):
        table.by_value[3] = table.by_value[4]


# ---------------------------------------------------------------------------
# 정규화와 문자 값
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("text, script, expected", [
    ("أَحْمَد", ARABIC, "احمد"),
    ("", ARABIC, ""),
    ("שלום", HEBREW, "שלום"),
    ("كـتـاب", ARABIC, "كتاب"),
    ("إسلام", ARABIC, "اسلام"),
    ("مسؤول", ARABIC, "مسوول"),
    ("مصطفى", ARABIC, "مصطفي"),
    ("שָׁלוֹם", HEBREW, "שלום"),
    ("abc 123", ARABIC, "abc 123"),
])
def test_normalize(text, script, expected):
    assert normalize(text, script) == expected


def test_normalize_folds_presentation_forms():
    # U+FEE1 (م 독립형), U+FEDF (ل 초형)
    assert normalize("ﻡﻟ", ARABIC) == "مل"


@given(st.text())
@settings(deadline=None)
def test_normalize_is_idempotent(text):
    for script in (ARABIC, HEBREW):
        once = normalize(text, script)
        assert normalize(once, script) == once


@pytest.mark.parametrize("letter, script, expected", [
    ('غ', ARABIC, 1000),
    ('ا', ARABIC, 1),
    ('أ', ARABIC, 1),
    ('ٱ', ARABIC, 1),
    ('ى', ARABIC, 10),
    ('ك', ARABIC, 20),
    ('ت', ARABIC, 400),
    ('ث', ARABIC, 500),
    ('ך', HEBREW, 20),
    ('ץ', HEBREW, 90),
    ('ת', HEBREW, 400),
])
def test_value_of(letter, script, expected):
    assert value_of(letter, script) == expected


def test_ta_marbuta_defaults_to_haa():
    assert value_of('ة', ARABIC) == 5
    assert value_of('ة', ARABIC, ta_marbuta="taa") == 400


def test_ta_marbuta_from_config_file(tmp_path):
    path = tmp_path / "abjadi.yaml"
    path.write_text("normalization:\n  ta_marbuta: taa\n", encoding="utf-8")
    load_config(path)
    assert value_of('ة', ARABIC) == 400
    assert guematria("ة", ARABIC) == 400


def test_invalid_config_value_is_rejected(tmp_path):
    path = tmp_path / "abjadi.yaml"
    path.write_text("normalization:\n  ta_marbuta: zaa\n", encoding="utf-8")
    with pytest.raises(ValueError):
        load_config(path)


@pytest.mark.parametrize("letter, script", [('a', ARABIC), ('1', ARABIC), ('غ', HEBREW), ('א', ARABIC), ('', ARABIC)])
def test_value_of_unknown_letter(letter, script):
    with pytest.raises(UnknownLetter):
        value_of(letter, script)


def test_errors_share_a_root():
    with pytest.raises(AbjadError):
        value_of('a', ARABIC)
    with pytest.raises(ValueError):
        value_of('a', ARABIC)


# ---------------------------------------------------------------------------
# 클래스 단어
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("v, script, expected", [
    (1245, ARABIC, [5, 40, 200, 1000]),
    (1, ARABIC, [1]),
    (499, HEBREW, [9, 90, 400]),
    (1000, ARABIC, [1000]),
    (1999, ARABIC, [9, 90, 900, 1000]),
    (406, ARABIC, [6, 400]),
])
def test_decompose_class(v, script, expected):
    assert decompose_class(v, script) == expected


@pytest.mark.parametrize("v, script", [(0, ARABIC), (2000, ARABIC), (500, HEBREW), (-3, ARABIC)])
def test_decompose_class_out_of_range(v, script):
    with pytest.raises(OutOfRange):
        decompose_class(v, script)


@pytest.mark.parametrize("v, expected", [
    (1245, "همرغ"),
    (789, "طفذ"),
    (456, "ونت"),
    (23, "جك"),
    (1000, "غ"),
])
def test_encode_class_word(v, expected):
    assert encode_class_word(v, ARABIC) == expected


def test_encode_class_word_hebrew_uses_base_forms():
    assert encode_class_word(20, HEBREW) == 'כ'
    assert encode_class_word(499, HEBREW) == "טצת"


@pytest.mark.parametrize("word, expected", [("همرغ", 1245), ("جك", 23), ("ا", 1), ("طفذ", 789)])
def test_decode_class_word_strict(word, expected):
    assert decode_class_word(word, ARABIC, strict=True) == expected


def test_decode_class_word_non_canonical():
    with pytest.raises(NonCanonical):
        decode_class_word("اا", ARABIC, strict=True)
    assert decode_class_word("اا", ARABIC) == 2
    with pytest.raises(NonCanonical):
        decode_class_word("غرمه", ARABIC, strict=True)
    assert decode_class_word("غرمه", ARABIC) == 1245


def test_decode_class_word_accepts_hebrew_finals():
    assert decode_class_word("ך", HEBREW, strict=True) == 20
    assert decode_class_word("םי", HEBREW) == 50


def test_decode_class_word_errors():
    with pytest.raises(UnknownLetter) as excinfo:
        decode_class_word("هx", ARABIC)
    assert excinfo.value.char == "x"
    assert excinfo.value.position == 1
    with pytest.raises(ParseError):
        decode_class_word("", ARABIC)


@pytest.mark.parametrize("script", [ARABIC, HEBREW])
def test_canonical_words_increase(script):
    table = load_table(script)
    max_letters = 4 if script is ARABIC else 3
    for v in range(1, table.single_word_max + 1):
        values = [table.by_codepoint[c].value for c in encode_class_word(v, script)]
        assert values == sorted(values)
        assert len(set(values)) == len(values) <= max_letters


@pytest.mark.parametrize("script", [ARABIC, HEBREW])
def test_single_word_round_trip_exhaustive(script):
    for v in range(1, load_table(script).single_word_max + 1):
        word = encode_class_word(v, script)
        assert decode_class_word(word, script, strict=True) == v
        assert guematria(word, script) == v


# ---------------------------------------------------------------------------
# 수 표현
# ---------------------------------------------------------------------------


def test_encode_number_examples():
    assert encode_number(1245, ARABIC) == "همرغ"
    assert encode_number(23456789, ARABIC) == "طفذ و ونت ألف و جك ألف ألف"
    assert encode_number(1000005, ARABIC) == "ه و ا ألف ألف"
    assert encode_number(2000, ARABIC) == "ب ألف"
    assert encode_number(6006, ARABIC) == "و و و ألف"


def test_encode_number_hebrew():
    assert encode_number(499, HEBREW) == "טצת"
    assert encode_number(1000, HEBREW) == "א אלף"
    assert encode_number(1001, HEBREW) == "א ו א אלף"


def test_encode_number_errors():
    with pytest.raises(OutOfRange):
        encode_number(0, ARABIC)
    with pytest.raises(UnrepresentableClass):
        encode_number(500, HEBREW)
    with pytest.raises(UnrepresentableClass) as excinfo:
        encode_number(600001, HEBREW)
    assert excinfo.value.class_value == 600
    assert excinfo.value.exponent == 1


@pytest.mark.parametrize("text, expected", [
    ("طفذ و ونت (ألف) و جك (ألف ألف)", 23456789),
    ("طفذ و ونت ألف و جك ألف ألف", 23456789),
    ("ا", 1),
    ("همرغ", 1245),
    ("جك ألف ألف و طفذ", 23000789),
    ("ب (ألف) (ألف)", 2000000),
    ("ا الف", 1000),
])
def test_decode_number(text, expected):
    assert decode_number(text, ARABIC) == expected


def test_decode_number_printed_manuscript_form():
    # ث = 500 이므로 "ونث" 클래스는 556
    assert decode_number("طفذ و ونث (ألف) و جك (ألف ألف)", ARABIC) == 23556789


def test_decode_number_hebrew_with_final_forms():
    assert decode_number("א ו א אלף", HEBREW) == 1001
    assert decode_number("ךי", HEBREW) == 30


@pytest.mark.parametrize("text, error", [
    ("", ParseError),
    ("ا و", ParseError),
    ("ا ب", ParseError),
    ("ا ( ب )", ParseError),
    ("ا ( ألف", ParseError),
    ("( ألف )", ParseError),
    ("ا ألف و ب ألف", DuplicateClass),
    ("ا و x", UnknownLetter),
])
def test_decode_number_errors(text, error):
    with pytest.raises(error):
        decode_number(text, ARABIC)


def test_decode_number_strict_checks_each_class_word():
    assert decode_number("طفذ و ونت ألف", ARABIC, strict=True) == 456789
    with pytest.raises(NonCanonical):
        decode_number("ذفط و ونت ألف", ARABIC, strict=True)


def test_parse_expression_groups():
    expression = parse_expression("جك (ألف ألف) و طفذ", ARABIC)
    assert [(g.class_value, g.exponent) for g in expression.groups] == [(789, 0), (23, 2)]
    assert expression.value == 23000789
    assert expression.render() == "طفذ و جك ألف ألف"


def test_number_expression_validates_groups():
    expression = NumberExpression.from_int(23456789, ARABIC)
    assert [(g.class_value, g.exponent) for g in expression.groups] == [(789, 0), (456, 1), (23, 2)]
    with pytest.raises(ParseError):
        NumberExpression((), ARABIC)
    with pytest.raises(ParseError):
        NumberExpression(tuple(reversed(expression.groups)), ARABIC)
    with pytest.raises(ParseError):
        parse_expression("طصظغ و ا ألف", ARABIC)


def test_grouped_round_trip_sampled_block():
    for n in range(1, 30000):
        assert decode_number(encode_number(n, ARABIC), ARABIC) == n


@pytest.mark.slow
def test_round_trip_exhaustive_two_million():
    started = time.perf_counter()
    for n in range(1, 2_000_001):
        assert decode_number(encode_number(n, ARABIC), ARABIC) == n
    assert time.perf_counter() - started < 60


def test_round_trip_resolves_table_once_per_call(monkeypatch):
    lookups = []

    def counting_get_config(key, default=None):
        lookups.append(key)
        return get_config(key, default)

    monkeypatch.setattr(abjad_core, "get_config", counting_get_config)
    assert decode_number(encode_number(23456789, ARABIC), ARABIC) == 23456789
    # from_int, render, parse_expression
    assert len(lookups) == 3


def test_table_precomputes_multiplier_key():
    assert load_table(ARABIC).multiplier_key == "الف"
    assert load_table(HEBREW).multiplier_key == "אלפ"
    assert decode_number("ب ألف", ARABIC) == decode_number("ب الف", ARABIC) == 2000


@given(st.integers(min_value=1, max_value=10 ** 15))
@settings(deadline=None)
def test_arabic_round_trip(n):
    assert decode_number(encode_number(n, ARABIC), ARABIC, strict=True) == n


@given(st.lists(st.integers(min_value=0, max_value=499), min_size=1, max_size=5))
@settings(deadline=None)
def test_hebrew_round_trip(classes):
    n = sum(c * 1000 ** e for e, c in enumerate(classes))
    if n == 0:
        return
    assert decode_number(encode_number(n, HEBREW), HEBREW) == n


def test_hebrew_round_trip_random_sample():
    rng = random.Random(20240)
    for _ in range(10_000):
        classes = [rng.randint(0, 499) for _ in range(rng.randint(1, 5))]
        n = sum(c * 1000 ** e for e, c in enumerate(classes))
        if n == 0:
            continue
        assert decode_number(encode_number(n, HEBREW), HEBREW) == n


# ---------------------------------------------------------------------------
# Guematria
# ---------------------------------------------------------------------------


def test_guematria_examples():
    assert guematria("احمد زينب", ARABIC) == 122
    assert guematria("", ARABIC) == 0
    assert guematria("احمد", ARABIC) == 53
    assert guematria("שלום", HEBREW) == 376


def test_letter_terms_trace():
    terms = letter_terms("احمد زينب", ARABIC)
    assert [value for _, value in terms] == [1, 8, 40, 4, 7, 10, 50, 2]


def test_guematria_strict_mode():
    assert guematria("احمد", ARABIC, mode="strict") == 53
    with pytest.raises(UnknownLetter):
        guematria("a1", ARABIC, mode="strict")
    with pytest.raises(UnknownLetter):
        guematria("احمد زينب", ARABIC, mode="strict")
    assert guematria("a1 ب!", ARABIC) == 2


def test_guematria_unknown_mode():
    with pytest.raises(ValueError):
        guematria("ا", ARABIC, mode="loose")


@given(arabic_letters, arabic_letters)
@settings(deadline=None)
def test_guematria_is_additive(a, b):
    assert guematria(a + b, ARABIC) == guematria(a, ARABIC) + guematria(b, ARABIC)


@pytest.mark.parametrize("script", [ARABIC, HEBREW])
def test_guematria_additive_random_pairs(script):
    rng = random.Random(7)
    alphabet = [letter.codepoint for letter in load_table(script).letters] + [" ", "-", "1"]
    for _ in range(10_000):
        a = "".join(rng.choices(alphabet, k=rng.randint(0, 12)))
        b = "".join(rng.choices(alphabet, k=rng.randint(0, 12)))
        assert guematria(a + b, script) == guematria(a, script) + guematria(b, script)
