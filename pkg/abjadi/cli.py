"""
Abjadi 명령행 인터페이스

하위 명령: encode, decode, gematria, translit, verbalize, group, lineage, audit, table
종료 코드: 0 = 성공, 1 = 검증에서 이상 발견, 2 = 사용법 또는 데이터 오류
"""

import argparse
import dataclasses
import logging
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence

from pydantic import BaseModel, ConfigDict, Field

from . import __version__
from .abjad_core import Script, decode_number, encode_number, letter_terms, load_table
from .config import TA_MARBUTA_CHOICES, get_config
from .errors import AbjadError
from .folio_audit import audit_folios, parse_folios, print_audit_report, read_folio_file
from .glyph_map import NumeralSystem, SourceLetter, shape_lineage, transliterate
from .number_format import CLASS_SEPARATOR, group_classes, verbalize_lr, verbalize_rl

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

EXIT_OK = 0
EXIT_ANOMALIES = 1
EXIT_ERROR = 2

SCRIPT_CHOICES = [script.value for script in Script]
SYSTEM_CHOICES = [system.value for system in NumeralSystem]


class CLIError(RuntimeError):
    """종료 코드를 가진 CLI 오류"""

    def __init__(self, message: str, exit_code: int = EXIT_ERROR):
        super().__init__(message)
        self.exit_code = exit_code


# ---------------------------------------------------------------------------
# 구조화 출력 모델
# ---------------------------------------------------------------------------


class CommandResult(BaseModel):
    """모든 구조화 출력의 공통 필드"""
    model_config = ConfigDict(populate_by_name=True)

    schema_version: str = Field(
        default_factory=lambda: str(get_config("output.schema", "1")),
        serialization_alias="schema",
    )
    command: str


class EncodeResult(CommandResult):
    command: str = "encode"
    script: Script
    number: int
    text: str


class DecodeResult(CommandResult):
    command: str = "decode"
    script: Script
    text: str
    number: int
    strict: bool


class LetterTerm(BaseModel):
    letter: str
    value: int


class GematriaResult(CommandResult):
    command: str = "gematria"
    script: Script
    text: str
    mode: str
    value: int
    terms: List[LetterTerm]


class TranslitResult(CommandResult):
    command: str = "translit"
    source: NumeralSystem
    target: NumeralSystem
    text: str
    result: str


class VerbalizeResult(CommandResult):
    command: str = "verbalize"
    number: int
    direction: str
    reading: str


class GroupResult(CommandResult):
    command: str = "group"
    number: int
    grouped: str


class SourceLetterModel(BaseModel):
    codepoint: str
    sound: str
    script: Script
    value: int


class LineageResult(CommandResult):
    command: str = "lineage"
    value: int
    western_glyph: str
    eastern_glyph: str
    ghubari_source: SourceLetterModel
    ghubari_transformation: str
    mashriki_source: SourceLetterModel
    mashriki_transformation: str
    modern_shape_twin: int
    note: str


class TableLetter(BaseModel):
    order: int
    codepoint: str
    sound: str
    value: int
    variants: List[str]


class TableResult(CommandResult):
    command: str = "table"
    script: Script
    letters: List[TableLetter]


class AuditResult(CommandResult):
    command: str = "audit"
    source: str
    system: NumeralSystem
    clean: bool
    counts: Dict[str, int]
    anomalies: List[Dict[str, Any]]


# ---------------------------------------------------------------------------
# 공통 도우미
# ---------------------------------------------------------------------------


def setup_logging(verbose: bool = False) -> None:
    """패키지 로거에 stderr 핸들러 하나를 설정 (결과는 stdout으로만 출력)"""
    package_logger = logging.getLogger("abjadi")
    for handler in list(package_logger.handlers):
        package_logger.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    package_logger.addHandler(handler)
    package_logger.setLevel(logging.DEBUG if verbose else logging.WARNING)


def _option(args: argparse.Namespace, name: str, default: Any = None) -> Any:
    return getattr(args, name, default)


def _script(args: argparse.Namespace) -> Script:
    return Script(_option(args, "script", Script.ARABIC.value))


def _structured(args: argparse.Namespace) -> bool:
    return _option(args, "output", "plain") == "structured"


def _stdin_text() -> str:
    """표준 입력을 로캘과 무관하게 UTF-8로 읽기 (BOM 허용)"""
    stream = getattr(sys.stdin, "buffer", None)
    if stream is None:
        return sys.stdin.read()
    return stream.read().decode("utf-8-sig")


def _read_text(value: Optional[str]) -> str:
    """위치 인자가 없으면 표준 입력"""
    if value is not None:
        return value
    return _stdin_text().strip()


def _read_int(value: Optional[str]) -> int:
    text = _read_text(value)
    try:
        return int(text)
    except ValueError:
        raise CLIError(f"정수가 아닙니다: {text!r}") from None


def _emit(args: argparse.Namespace, result: CommandResult, plain: str) -> None:
    if _structured(args):
        print(result.model_dump_json(by_alias=True))
    else:
        print(plain)


def _source_model(letter: SourceLetter) -> SourceLetterModel:
    return SourceLetterModel(codepoint=letter.codepoint, sound=letter.sound,
                             script=letter.script, value=letter.value)


def _anomaly_payload(anomaly: Any) -> Dict[str, Any]:
    payload = dataclasses.asdict(anomaly)
    payload["index"] = anomaly.index
    pair = getattr(anomaly, "confusion_pair", None)
    if pair is not None:
        payload["confusion_pair"] = {
            "a": [pair.a[0].value, pair.a[1]],
            "b": [pair.b[0].value, pair.b[1]],
            "note": pair.note,
        }
    return payload


# ---------------------------------------------------------------------------
# 하위 명령 처리
# ---------------------------------------------------------------------------


def _cmd_encode(args: argparse.Namespace) -> int:
    number = _read_int(args.number)
    script = _script(args)
    text = encode_number(number, script)
    _emit(args, EncodeResult(script=script, number=number, text=text), text)
    return EXIT_OK


def _cmd_decode(args: argparse.Namespace) -> int:
    text = _read_text(args.text)
    script = _script(args)
    strict = _option(args, "strict", False) or bool(get_config("decode.strict", False))
    number = decode_number(text, script, strict=strict, ta_marbuta=_option(args, "ta_marbuta"))
    _emit(args, DecodeResult(script=script, text=text, number=number, strict=strict), str(number))
    return EXIT_OK


def _cmd_gematria(args: argparse.Namespace) -> int:
    text = _read_text(args.text)
    script = _script(args)
    mode = "strict" if _option(args, "strict", False) else get_config("guematria.mode", "lenient")
    terms = letter_terms(text, script, mode, ta_marbuta=_option(args, "ta_marbuta"))
    value = sum(v for _, v in terms)

    plain = str(value)
    if args.explain:
        plain = f"{' + '.join(str(v) for _, v in terms) or '0'} = {value}"
    result = GematriaResult(
        script=script,
        text=text,
        mode=mode,
        value=value,
        terms=[LetterTerm(letter=letter, value=v) for letter, v in terms],
    )
    _emit(args, result, plain)
    return EXIT_OK


def _cmd_translit(args: argparse.Namespace) -> int:
    source = NumeralSystem(args.source)
    target = NumeralSystem(args.target)

    if args.text is None and not _structured(args):
        # 파이프 입력은 바이트 그대로 보존 (줄바꿈 추가 없음)
        raw = sys.stdin.buffer.read().decode("utf-8")
        sys.stdout.flush()
        sys.stdout.buffer.write(transliterate(raw, source, target).encode("utf-8"))
        sys.stdout.buffer.flush()
        return EXIT_OK

    text = _read_text(args.text)
    converted = transliterate(text, source, target)
    _emit(args, TranslitResult(source=source, target=target, text=text, result=converted), converted)
    return EXIT_OK


def _cmd_verbalize(args: argparse.Namespace) -> int:
    number = _read_int(args.number)
    if args.direction == "lr":
        reading = verbalize_lr(number)
    else:
        reading = verbalize_rl(number, class_separator=args.class_separator)
    _emit(args, VerbalizeResult(number=number, direction=args.direction, reading=reading), reading)
    return EXIT_OK


def _cmd_group(args: argparse.Namespace) -> int:
    number = _read_int(args.number)
    grouped = group_classes(number)
    _emit(args, GroupResult(number=number, grouped=grouped), grouped)
    return EXIT_OK


def _cmd_lineage(args: argparse.Namespace) -> int:
    record = shape_lineage(_read_int(args.value))
    result = LineageResult(
        value=record.value,
        western_glyph=record.western_glyph,
        eastern_glyph=record.eastern_glyph,
        ghubari_source=_source_model(record.ghubari_source),
        ghubari_transformation=record.ghubari_transformation.value,
        mashriki_source=_source_model(record.mashriki_source),
        mashriki_transformation=record.mashriki_transformation.value,
        modern_shape_twin=record.modern_shape_twin,
        note=record.note,
    )
    ghubari = record.ghubari_source
    mashriki = record.mashriki_source
    plain = "\n".join([
        f"값: {record.value} (서양 {record.western_glyph}, 동부 아랍 {record.eastern_glyph})",
        f"Ghubari: {ghubari.codepoint} ({ghubari.sound}, {ghubari.value}) {record.ghubari_transformation.value}",
        f"Mashriki: {mashriki.codepoint} ({mashriki.sound}, {mashriki.value}) {record.mashriki_transformation.value}",
        f"현대 숫자 모양: {record.modern_shape_twin}",
        f"비고: {record.note}",
    ])
    _emit(args, result, plain)
    return EXIT_OK


def _cmd_table(args: argparse.Namespace) -> int:
    table = load_table(_script(args), _option(args, "ta_marbuta"))
    letters = [
        TableLetter(
            order=letter.order,
            codepoint=letter.codepoint,
            sound=letter.sound,
            value=letter.value,
            variants=sorted(letter.variant_codepoints),
        )
        for letter in table.letters
    ]
    plain = "\n".join(
        f"{letter.order:2d}  {letter.codepoint}  {letter.sound:10s} {letter.value:>5}"
        + (f"  ({' '.join(letter.variants)})" if letter.variants else "")
        for letter in letters
    )
    _emit(args, TableResult(script=table.script, letters=letters), plain)
    return EXIT_OK


def _cmd_audit(args: argparse.Namespace) -> int:
    system = NumeralSystem(args.system)
    if args.file is None:
        source = "<stdin>"
        records = parse_folios(_stdin_text().splitlines(), system)
    else:
        source = args.file
        records = read_folio_file(args.file, system)

    report = audit_folios(records, _script(args))
    if _structured(args):
        result = AuditResult(
            source=source,
            system=system,
            clean=report.clean,
            counts=dict(report.counts),
            anomalies=[_anomaly_payload(anomaly) for anomaly in report.anomalies],
        )
        print(result.model_dump_json(by_alias=True))
    else:
        print_audit_report(report, records, source)
    return EXIT_OK if report.clean else EXIT_ANOMALIES


# ---------------------------------------------------------------------------
# 파서
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    """하위 명령 파서 생성 (공통 옵션은 하위 명령 앞뒤 어디에나 올 수 있음)"""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=["plain", "structured"], default=argparse.SUPPRESS,
                        help="출력 형식 (기본값: plain)")
    common.add_argument("--strict", action="store_true", default=argparse.SUPPRESS,
                        help="정규형 단어만 허용 / 값이 없는 문자를 오류로 처리")
    common.add_argument("--script", choices=SCRIPT_CHOICES, default=argparse.SUPPRESS,
                        help="문자 체계 (기본값: arabic)")
    common.add_argument("--ta-marbuta", dest="ta_marbuta", choices=TA_MARBUTA_CHOICES, default=argparse.SUPPRESS,
                        help="ة의 값: haa → 5, taa → 400 (기본값: haa)")
    common.add_argument("--verbose", "-v", action="store_true", default=argparse.SUPPRESS,
                        help="디버그 로그 출력")

    parser = argparse.ArgumentParser(
        prog="abjadi",
        description="Abjad 숫자 변환, Guematria 계산, 숫자 체계 음역, 폴리오 번호 검증",
        parents=[common],
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler: Callable[[argparse.Namespace], int], help_text: str) -> argparse.ArgumentParser:
        sub = subparsers.add_parser(name, parents=[common], help=help_text)
        sub.set_defaults(handler=handler)
        return sub

    encode = add("encode", _cmd_encode, "정수 → Abjad 문자 표기")
    encode.add_argument("number", nargs="?", help="양의 정수 (없으면 표준 입력)")

    decode = add("decode", _cmd_decode, "Abjad 문자 표기 → 정수")
    decode.add_argument("text", nargs="?", help="문자 표기 (없으면 표준 입력)")

    gematria = add("gematria", _cmd_gematria, "텍스트의 Abjad 값 합계")
    gematria.add_argument("text", nargs="?", help="텍스트 (없으면 표준 입력)")
    gematria.add_argument("--explain", action="store_true", help="문자별 값 계산식 출력")

    translit = add("translit", _cmd_translit, "숫자 체계 음역")
    translit.add_argument("text", nargs="?", help="텍스트 (없으면 표준 입력)")
    translit.add_argument("--from", dest="source", choices=SYSTEM_CHOICES, required=True)
    translit.add_argument("--to", dest="target", choices=SYSTEM_CHOICES, required=True)

    verbalize = add("verbalize", _cmd_verbalize, "오른쪽-왼쪽(rl) 또는 왼쪽-오른쪽(lr) 읽기")
    verbalize.add_argument("number", nargs="?", help="양의 정수 (없으면 표준 입력)")
    verbalize.add_argument("--direction", choices=["rl", "lr"], default="rl")
    verbalize.add_argument("--class-separator", default=CLASS_SEPARATOR,
                           help="rl 읽기의 클래스 구분자 (기본값: ' and ')")

    group = add("group", _cmd_group, "3자리 클래스 묶음 표기")
    group.add_argument("number", nargs="?", help="0 이상의 정수 (없으면 표준 입력)")

    lineage = add("lineage", _cmd_lineage, "숫자 모양의 기원 문자")
    lineage.add_argument("value", nargs="?", help="0..9 (없으면 표준 입력)")

    audit = add("audit", _cmd_audit, "폴리오 번호 검증")
    audit.add_argument("file", nargs="?", help="폴리오 목록 파일 (없으면 표준 입력)")
    audit.add_argument("--system", choices=SYSTEM_CHOICES, default=NumeralSystem.MODERN_WESTERN.value,
                       help="번호의 숫자 체계 (기본값: western)")

    add("table", _cmd_table, "Abjad 값 표 출력")

    return parser


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    """명령행 파싱 후 하위 명령을 실행하고 종료 코드 반환"""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_ERROR

    setup_logging(_option(args, "verbose", False))
    logger.debug(f"명령 실행: {args.command}")

    try:
        return args.handler(args)
    except CLIError as exc:
        logger.error(str(exc))
        return exc.exit_code
    except AbjadError as exc:
        logger.error(f"{type(exc).__name__}: {exc}")
        return EXIT_ERROR
    except (OSError, UnicodeDecodeError) as exc:
        logger.error(f"입력 오류: {exc}")
        return EXIT_ERROR


def main(argv: Optional[Sequence[str]] = None) -> int:
    """콘솔 진입점"""
    for stream in (sys.stdin, sys.stdout, sys.stderr):
        if hasattr(stream, "reconfigure"):
            stream.reconfigure(encoding="utf-8")
    return run_cli(argv)
