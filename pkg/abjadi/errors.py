"""
예외 정의 모듈
모든 변환/검증 오류는 AbjadError를 상속합니다.
"""

from typing import Optional


class AbjadError(ValueError):
    """Abjadi 패키지 공통 예외"""


class UnknownLetter(AbjadError):
    """Abjad 값이 없는 문자"""

    def __init__(self, char: str, script: str, position: Optional[int] = None):
        self.char = char
        self.script = script
        self.position = position
        where = f" (위치 {position})" if position is not None else ""
        super().__init__(f"{script} 표에 없는 문자: {char!r}{where}")


class NonCanonical(AbjadError):
    """strict 모드에서 정규형이 아닌 클래스 단어"""

    def __init__(self, word: str, values: list):
        self.word = word
        self.values = values
        super().__init__(f"정규형이 아닌 단어: {word!r} 값 순서 {values}")


class OutOfRange(AbjadError):
    """표현 범위를 벗어난 수"""

    def __init__(self, value: int, low: int, high: Optional[int] = None):
        self.value = value
        self.low = low
        self.high = high
        bound = f"{low}..{high}" if high is not None else f"{low} 이상"
        super().__init__(f"범위를 벗어난 값: {value} (허용 범위 {bound})")


class UnrepresentableClass(AbjadError):
    """해당 문자 체계로 표현할 수 없는 3자리 클래스"""

    def __init__(self, class_value: int, exponent: int, script: str):
        self.class_value = class_value
        self.exponent = exponent
        self.script = script
        super().__init__(f"{script}로 표현할 수 없는 클래스: {class_value} (천^{exponent})")


class ParseError(AbjadError):
    """입력 문법 오류"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"{line}번째 줄: {message}"
        super().__init__(message)


class DuplicateClass(AbjadError):
    """같은 지수의 클래스가 두 번 나타남"""

    def __init__(self, exponent: int):
        self.exponent = exponent
        super().__init__(f"중복된 클래스 지수: 천^{exponent}")


class NotADigit(AbjadError):
    """숫자 체계에 속하지 않는 문자"""

    def __init__(self, char: str, system: str):
        self.char = char
        self.system = system
        super().__init__(f"{system} 숫자가 아닙니다: {char!r}")


class EmptyInput(AbjadError):
    """빈 입력"""
