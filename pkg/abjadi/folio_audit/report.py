"""
폴리오 검증 리포트 출력 함수
"""

from typing import List, Optional

from .config import (
    SEPARATOR_WIDTH,
    AuditReport,
    CatchwordMismatch,
    Duplicate,
    FolioRecord,
    Gap,
    NonMonotone,
    SuspectMisread,
)
from .utils import format_number, format_value_list, print_section_header


def _label(records: List[FolioRecord], index: int) -> str:
    return records[index].label


def print_summary(report: AuditReport) -> None:
    """
    전체 요약 출력

    Args:
        report: 검증 결과
    """
    print_section_header("요약", 1)
    counts = report.counts
    print(f"폴리오 수: {format_number(counts['records'])}장 (서로 다른 번호 {format_number(counts['distinct_labels'])}개)")
    print(f"번호 범위: {format_number(counts['first_label'])} → {format_number(counts['last_label'])}")
    print(f"이상 항목: {format_number(counts['total'])}건")
    print()


def print_gaps(report: AuditReport, records: List[FolioRecord]) -> None:
    """빠진 번호 출력"""
    print_section_header("빠진 번호", 2)
    gaps = [a for a in report.anomalies if isinstance(a, Gap)]
    if not gaps:
        print("  없음")
    for gap in gaps:
        print(f"  {_label(records, gap.index)} 앞: {format_value_list(gap.missing_numbers)}")
    if gaps:
        print(f"빠진 장 합계: {format_number(report.counts['missing_labels'])}장")
    print()


def print_duplicates(report: AuditReport) -> None:
    """중복 번호 출력"""
    print_section_header("중복 번호", 3)
    duplicates = [a for a in report.anomalies if isinstance(a, Duplicate)]
    if not duplicates:
        print("  없음")
    for duplicate in duplicates:
        positions = ", ".join(str(i + 1) for i in duplicate.indices)
        print(f"  {format_number(duplicate.number)}: {len(duplicate.indices)}회 (물리적 위치 {positions})")
    print()


def print_order_anomalies(report: AuditReport, records: List[FolioRecord]) -> None:
    """순서 어긋남과 오독 의심 출력"""
    print_section_header("순서 어긋남", 4)
    found = False
    for anomaly in report.anomalies:
        if isinstance(anomaly, NonMonotone):
            found = True
            print(f"  위치 {anomaly.index + 1}: 기대 {format_number(anomaly.expected)}, "
                  f"실제 {_label(records, anomaly.index)} ({format_number(anomaly.found)})")
        elif isinstance(anomaly, SuspectMisread):
            found = True
            print(f"    [?] 오독 의심: {format_number(anomaly.found_value)} → {format_number(anomaly.suggested_value)}")
            print(f"        {anomaly.confusion_pair.note}")
    if not found:
        print("  없음")
    print()


def print_catchword_mismatches(report: AuditReport) -> None:
    """catchword 불일치 출력"""
    print_section_header("catchword 불일치", 5)
    mismatches = [a for a in report.anomalies if isinstance(a, CatchwordMismatch)]
    if not mismatches:
        print("  없음")
    for mismatch in mismatches:
        print(f"  위치 {mismatch.index + 1}: {mismatch.catchword!r} ≠ 다음 쪽 {mismatch.next_first_word!r}")
    print()


def print_audit_report(report: AuditReport, records: List[FolioRecord], source: Optional[str] = None) -> None:
    """
    폴리오 검증 리포트 전체 출력

    Args:
        report: audit_folios 결과
        records: 검증한 폴리오 목록 (번호 표기용)
        source: 입력 파일 이름
    """
    print("=" * SEPARATOR_WIDTH)
    print("폴리오 번호 검증 리포트")
    print("=" * SEPARATOR_WIDTH)
    if source:
        print(f"입력: {source}")
    print()

    print_summary(report)
    print_gaps(report, records)
    print_duplicates(report)
    print_order_anomalies(report, records)
    print_catchword_mismatches(report)

    if report.clean:
        print("[OK] 이상 없음")
    else:
        print(f"[X] 이상 {format_number(report.counts['total'])}건")
    print("=" * SEPARATOR_WIDTH)
