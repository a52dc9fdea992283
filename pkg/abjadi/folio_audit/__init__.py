"""
폴리오 검증 패키지

필사본 폴리오 번호의 빠진 장, 중복, 순서 어긋남, 숫자 오독 의심과
catchword 불일치를 찾아 리포트합니다.
"""

from .config import (
    AuditReport,
    CatchwordMismatch,
    Duplicate,
    FolioRecord,
    Gap,
    NonMonotone,
    SuspectMisread,
)
from .parser import parse_folios, read_folio_file
from .report import print_audit_report
from .sequence_checker import audit_catchwords, audit_folios, audit_sequence

__all__ = [
    'AuditReport',
    'CatchwordMismatch',
    'Duplicate',
    'FolioRecord',
    'Gap',
    'NonMonotone',
    'SuspectMisread',
    'audit_catchwords',
    'audit_folios',
    'audit_sequence',
    'parse_folios',
    'print_audit_report',
    'read_folio_file',
]
