"""
폴리오 검증 통계 계산 함수
"""

from collections import Counter
from typing import List

from .config import ANOMALY_KINDS, Anomaly, AuditCounts, FolioRecord, Gap


def count_anomalies(records: List[FolioRecord], anomalies: List[Anomaly]) -> AuditCounts:
    """
    이상 유형별 개수와 번호 범위 요약

    Example:
        >>> counts = count_anomalies(records, report.anomalies)
        >>> counts['gap'], counts['missing_labels']  # (2, 2) - 빠진 장 4, 23
    """
    values = [record.value for record in records]
    kinds = Counter(anomaly.kind for anomaly in anomalies)
    missing = sum(len(anomaly.missing_numbers) for anomaly in anomalies if isinstance(anomaly, Gap))

    counts = AuditCounts(
        records=len(records),
        distinct_labels=len(set(values)),
        first_label=values[0] if values else 0,
        last_label=values[-1] if values else 0,
        missing_labels=missing,
        gap=0,
        duplicate=0,
        non_monotone=0,
        suspect_misread=0,
        catchword_mismatch=0,
        total=len(anomalies),
    )
    for kind in ANOMALY_KINDS:
        counts[kind] = kinds.get(kind, 0)
    return counts
