"""
설정 관리 모듈
내장 기본값을 사용하며, 명시적으로 경로를 넘긴 경우에만 YAML 파일로 오버라이드합니다.
"""

import copy
import logging
from pathlib import Path
from typing import Any, Dict, Optional, Union

import yaml

logger = logging.getLogger(__name__)

_config: Optional[Dict] = None

DEFAULT_CONFIG: Dict[str, Any] = {
    "normalization": {
        # ة 값: "haa" → 5, "taa" → 400
        "ta_marbuta": "haa",
    },
    "guematria": {"mode": "lenient"},
    "decode": {"strict": False},
    "output": {"schema": "1"},
}

TA_MARBUTA_CHOICES = ("haa", "taa")


def _merge(base: Dict, override: Dict) -> Dict:
    """중첩 딕셔너리 병합 (override 우선)"""
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def _validate(cfg: Dict) -> None:
    ta_marbuta = cfg["normalization"]["ta_marbuta"]
    if ta_marbuta not in TA_MARBUTA_CHOICES:
        raise ValueError(f"normalization.ta_marbuta 값이 잘못되었습니다: {ta_marbuta!r} "
                         f"(허용: {', '.join(TA_MARBUTA_CHOICES)})")
    if cfg["guematria"]["mode"] not in ("lenient", "strict"):
        raise ValueError(f"guematria.mode 값이 잘못되었습니다: {cfg['guematria']['mode']!r}")


def load_config(config_path: Optional[Union[str, Path]] = None) -> Dict:
    """
    설정 로드

    Args:
        config_path: YAML 설정 파일 경로 (None이면 내장 기본값만 사용)

    Returns:
        설정 딕셔너리
    """
    global _config
    if config_path is None:
        if _config is None:
            _config = copy.deepcopy(DEFAULT_CONFIG)
        return _config

    config_path = Path(config_path)
    with open(config_path, "r", encoding="utf-8") as f:
        raw = yaml.safe_load(f) or {}
    if not isinstance(raw, dict):
        raise ValueError(f"설정 파일 최상위는 매핑이어야 합니다: {config_path}")

    cfg = _merge(DEFAULT_CONFIG, raw)
    _validate(cfg)
    _config = cfg
    logger.info(f"설정 로드 완료: {config_path}")
    return _config


def reset_config() -> None:
    """캐시된 설정 초기화 (내장 기본값으로 복귀)"""
    global _config
    _config = None


def get_config(key: str, default: Any = None) -> Any:
    """
    점(.) 구분 키로 설정값 조회.  예: get_config('normalization.ta_marbuta')
    """
    cfg = load_config()
    val = cfg
    for k in key.split("."):
        if isinstance(val, dict):
            val = val.get(k)
        else:
            return default
        if val is None:
            return default
    return val
