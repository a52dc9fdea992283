"""
테스트 공통 fixture
"""

from pathlib import Path

import pytest

from abjadi.config import reset_config

FIXTURES_DIR = Path(__file__).parent / "fixtures"


@pytest.fixture(autouse=True)
def default_config():
    """테스트마다 내장 기본 설정으로 시작"""
    reset_config()
    yield
    reset_config()


@pytest.fixture
def khalil_path() -> Path:
    """폴리오 4, 23이 빠지고 77이 두 번 나오는 필사본 목록"""
    return FIXTURES_DIR / "khalil.tsv"
