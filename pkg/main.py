"""
Abjadi 숫자 도구 메인 실행 파일

사용 예:
    python main.py encode 1245
    python main.py gematria "احمد زينب" --explain
    python main.py audit fixtures/khalil.tsv --system ghubari
"""

import sys

from abjadi.cli import main

if __name__ == "__main__":
    sys.exit(main())
