"""
폴리오 번호 순서 및 catchword 검증 메인 로직
"""

import logging
from typing import Dict, Iterable, List

from ..abjad_core import Script, normalize
from ..errors import EmptyInput
from ..glyph_map import confusable_readings, digit_value
from .config import (
    Anomaly,
    AuditReport,
    CatchwordMismatch,
    Duplicate,
    FolioRecord,
    Gap,
    NonMonotone,
    SuspectMisread,
)
from .statistics import count_anomalies

logger = logging.getLogger(__name__)


def _runs(values: Iterable[int]) -> List[List[int]]:
    """정렬된 값들을 연속 구간으로 분할"""
    runs: List[List[int]] = []
    for value in values:
        if runs and runs[-1][-1] + 1 == value:
            runs[-1].append(value)
        else:
            runs.append([value])
    return runs


def _misread_suggestions(record: FolioRecord, expected: int) -> List[SuspectMisread]:
    """
    번호의 한 자리를 오독 쌍으로 바꿔 기대 번호가 되는지 확인

    Args:
        record: 순서가 어긋난 폴리오
        expected: 그 위치의 기대 번호

    Returns:
        SuspectMisread 목록 (오독 쌍마다 최대 한 개)
    """
    digits = [digit_value(ch, record.system) for ch in record.label]
    suggestions = []
    for position, digit in enumerate(digits):
        for candidate_digit, pair in confusable_readings(record.system, digit):
            candidate = digits[:position] + [candidate_digit] + digits[position + 1:]
            value = int("".join(str(d) for d in candidate))
            if value == expected and all(s.confusion_pair != pair for s in suggestions):
                suggestions.append(SuspectMisread(record.index, record.value, value, pair))
    return suggestions


def audit_sequence(records: List[FolioRecord]) -> AuditReport:
    """
    폴리오 번호가 시작 번호부터 1씩 증가하는지 검증

    - 건너뛴 번호가 뒤에서도 나오지 않으면 Gap (연속 구간마다 한 개)
    - 이미 나온 번호는 Duplicate (번호마다 한 개, 모든 위치 포함)
    - 그 밖의 어긋난 번호는 NonMonotone, 오독 쌍으로 기대 번호가 되면 SuspectMisread 추가

    Raises:
        EmptyInput: 폴리오가 없는 경우
    """
    if not records:
        raise EmptyInput("검증할 폴리오가 없습니다")

    values = [record.value for record in records]
    seen: Dict[int, List[int]] = {values[0]: [0]}
    expected = values[0] + 1
    anomalies: List[Anomaly] = []

    for i in range(1, len(values)):
        value = values[i]
        if value in seen:
            seen[value].append(i)
            continue
        seen[value] = [i]

        if value == expected:
            expected += 1
        elif value > expected and not any(
            later not in seen and expected <= later < value for later in values[i + 1:]
        ):
            missing = [n for n in range(expected, value) if n not in seen]
            for run in _runs(missing):
                anomalies.append(Gap(i, tuple(run)))
            expected = value + 1
        else:
            anomalies.append(NonMonotone(i, expected, value))
            anomalies.extend(_misread_suggestions(records[i], expected))

        while expected in seen:
            expected += 1

    for number, indices in seen.items():
        if len(indices) > 1:
            anomalies.append(Duplicate(number, tuple(indices)))

    anomalies.sort(key=lambda anomaly: anomaly.index)
    report = AuditReport(anomalies=anomalies, counts=count_anomalies(records, anomalies))
    logger.info(f"번호 검증 완료: {len(records)}장, 이상 {len(anomalies)}건")
    return report


def audit_catchwords(records: List[FolioRecord], script: Script = Script.ARABIC) -> List[CatchwordMismatch]:
    """
    catchword 연결 검증

    각 쪽의 catchword(한 단어 또는 두 단어)가 다음 쪽 첫 줄의 첫 단어(들)와 같은지 비교합니다.
    어느 한쪽 값이 없으면 건너뜁니다.
    """
    mismatches = []
    for current, following in zip(records, records[1:]):
        if not current.catchword or not following.first_word:
            continue
        expected_words = normalize(current.catchword, script).split()
        actual_words = normalize(following.first_word, script).split()[:len(expected_words)]
        if expected_words != actual_words:
            mismatches.append(CatchwordMismatch(current.index, current.catchword, following.first_word))
    if mismatches:
        logger.info(f"catchword 불일치 {len(mismatches)}건")
    return mismatches


def audit_folios(records: List[FolioRecord], script: Script = Script.ARABIC) -> AuditReport:
    """번호 순서 검증과 catchword 검증을 합친 리포트"""
    report = audit_sequence(records)
    anomalies = sorted(report.anomalies + audit_catchwords(records, script), key=lambda anomaly: anomaly.index)
    return AuditReport(anomalies=anomalies, counts=count_anomalies(records, anomalies))
