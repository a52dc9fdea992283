"""
폴리오 검증 설정 및 타입 정의
"""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple, TypedDict, Union

from ..glyph_map import ConfusionPair, NumeralSystem, parse_digits

# 입력 형식 상수
FIELD_SEPARATOR = "\t"
COMMENT_PREFIX = "#"
MAX_FIELDS = 3

# 리포트 출력
MAX_LISTED_VALUES = 20
SEPARATOR_WIDTH = 70


@dataclass(frozen=True)
class FolioRecord:
    """필사본 한 장(폴리오)"""
    index: int
    label: str
    system: NumeralSystem
    catchword: Optional[str] = None
    first_word: Optional[str] = None

    @property
    def value(self) -> int:
        return parse_digits(self.label, self.system)


@dataclass(frozen=True)
class Gap:
    """빠진 번호 구간 (연속 구간 하나당 한 개)"""
    index: int
    missing_numbers: Tuple[int, ...]
    kind: str = field(default="gap", init=False)


@dataclass(frozen=True)
class Duplicate:
    """두 번 이상 매겨진 번호"""
    number: int
    indices: Tuple[int, ...]
    kind: str = field(default="duplicate", init=False)

    @property
    def index(self) -> int:
        return self.indices[1]


@dataclass(frozen=True)
class NonMonotone:
    """순서가 어긋난 번호"""
    index: int
    expected: int
    found: int
    kind: str = field(default="non_monotone", init=False)


@dataclass(frozen=True)
class SuspectMisread:
    """오독 쌍으로 설명되는 순서 어긋남"""
    index: int
    found_value: int
    suggested_value: int
    confusion_pair: ConfusionPair
    kind: str = field(default="suspect_misread", init=False)


@dataclass(frozen=True)
class CatchwordMismatch:
    """다음 쪽 첫 단어와 맞지 않는 catchword"""
    index: int
    catchword: str
    next_first_word: str
    kind: str = field(default="catchword_mismatch", init=False)


Anomaly = Union[Gap, Duplicate, NonMonotone, SuspectMisread, CatchwordMismatch]

ANOMALY_KINDS = ("gap", "duplicate", "non_monotone", "suspect_misread", "catchword_mismatch")


class AuditCounts(TypedDict):
    """검증 요약 타입"""
    records: int
    distinct_labels: int
    first_label: int
    last_label: int
    missing_labels: int
    gap: int
    duplicate: int
    non_monotone: int
    suspect_misread: int
    catchword_mismatch: int
    total: int


@dataclass
class AuditReport:
    """검증 결과"""
    anomalies: List[Anomaly]
    counts: AuditCounts

    @property
    def clean(self) -> bool:
        return not self.anomalies
