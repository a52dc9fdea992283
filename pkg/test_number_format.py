"""
오른쪽-왼쪽 숫자 읽기 테스트
"""

import random

import pytest
from hypothesis import assume, given, settings, strategies as st

from abjadi.errors import OutOfRange, ParseError
from abjadi.number_format import (
    SEMICOLON_SEPARATOR,
    class_readings,
    group_classes,
    multiplier_exponent,
    multiplier_name,
    read_rl,
    split_classes,
    verbalize_lr,
    verbalize_rl,
)

READING_12457892 = "2 and 90 and 800 and 7 and 50 and 400 thousand and 2 and 10 million"


def _unambiguous(n: int) -> bool:
    """일의 클래스 경계가 " and " 구분만으로 드러나는지"""
    readings = class_readings(n)
    if len(readings) < 2 or readings[0].exponent != 0:
        return True
    return readings[0].values[-1] >= readings[1].values[0]


@pytest.mark.parametrize("n, expected", [(12457892, "12 457 892"), (0, "0"), (1000, "1 000"), (999, "999")])
def test_group_classes(n, expected):
    assert group_classes(n) == expected


@given(st.integers(min_value=0, max_value=10 ** 18))
@settings(deadline=None)
def test_group_classes_keeps_digits(n):
    assert group_classes(n).replace(" ", "") == str(n)


def test_group_classes_negative():
    with pytest.raises(OutOfRange):
        group_classes(-1)


def test_split_classes():
    assert split_classes(23456789) == [789, 456, 23]
    assert split_classes(1000005) == [5, 0, 1]
    assert split_classes(0) == [0]
    with pytest.raises(OutOfRange):
        split_classes(-5)


@pytest.mark.parametrize("exponent, name", [
    (0, ""),
    (1, "thousand"),
    (2, "million"),
    (3, "thousand million"),
    (4, "thousand thousand million"),
])
def test_multiplier_names(exponent, name):
    assert multiplier_name(exponent) == name
    assert multiplier_exponent(name) == exponent


def test_multiplier_exponent_accepts_plurals():
    assert multiplier_exponent("millions") == 2
    assert multiplier_exponent("thousands") == 1
    with pytest.raises(ParseError):
        multiplier_exponent("billion")
    with pytest.raises(ParseError):
        multiplier_exponent("million thousand")


def test_class_readings():
    readings = class_readings(12457892)
    assert [r.exponent for r in readings] == [0, 1, 2]
    assert readings[1].parts == ((7, "units"), (50, "tens"), (400, "hundreds"))
    assert readings[1].class_multiplier == "thousand"
    assert readings[1].class_value == 457
    assert [r.class_value for r in class_readings(1000005)] == [5, 1]


@pytest.mark.parametrize("n, expected", [
    (12457892, READING_12457892),
    (7, "7"),
    (1000000, "1 million"),
    (10, "10"),
    (1000005, "5 and 1 million"),
    (1000000000, "1 thousand million"),
])
def test_verbalize_rl(n, expected):
    assert verbalize_rl(n) == expected


def test_verbalize_rl_with_class_separator():
    assert verbalize_rl(12457892, SEMICOLON_SEPARATOR) == \
        "2 and 90 and 800; 7 and 50 and 400 thousand; 2 and 10 million"


@pytest.mark.parametrize("n, expected", [
    (12457892, "12 million 457 thousand 892"),
    (1000005, "1 million 5"),
    (7, "7"),
])
def test_verbalize_lr(n, expected):
    assert verbalize_lr(n) == expected


@pytest.mark.parametrize("n", [0, -1])
def test_verbalize_out_of_range(n):
    with pytest.raises(OutOfRange):
        verbalize_rl(n)
    with pytest.raises(OutOfRange):
        verbalize_lr(n)


@given(st.integers(min_value=1, max_value=10 ** 12))
@settings(deadline=None)
def test_values_increase_within_each_class(n):
    for reading in class_readings(n):
        assert reading.values == sorted(set(reading.values))
        assert len(reading.parts) <= 3


def test_read_rl_plural_and_semicolon_forms():
    assert read_rl(READING_12457892) == 12457892
    assert read_rl("2 and 90 and 800; 7 and 50 and 400 thousands ; 2 and 10 millions") == 12457892


def test_read_rl_ambiguous_and_form():
    # 일의 클래스 2 뒤에 천의 클래스 90이 오면 " and " 만으로는 경계가 없음
    assert verbalize_rl(90002) == "2 and 90 thousand"
    assert read_rl(verbalize_rl(90002)) == 92000
    assert read_rl(verbalize_rl(90002, SEMICOLON_SEPARATOR)) == 90002


@pytest.mark.parametrize("text", ["", "abc", "5 billion", "2 and"])
def test_read_rl_errors(text):
    with pytest.raises(ParseError):
        read_rl(text)


@given(st.integers(min_value=1, max_value=10 ** 9))
@settings(deadline=None, max_examples=500)
def test_read_rl_inverts_separated_form(n):
    assert read_rl(verbalize_rl(n, SEMICOLON_SEPARATOR)) == n


@given(st.integers(min_value=1, max_value=10 ** 9))
@settings(deadline=None, max_examples=500)
def test_read_rl_inverts_unambiguous_and_form(n):
    assume(_unambiguous(n))
    assert read_rl(verbalize_rl(n)) == n


def test_read_rl_random_sample():
    rng = random.Random(12457892)
    for _ in range(10_000):
        n = rng.randint(1, 10 ** 12)
        assert read_rl(verbalize_rl(n, SEMICOLON_SEPARATOR)) == n
        if _unambiguous(n):
            assert read_rl(verbalize_rl(n)) == n
