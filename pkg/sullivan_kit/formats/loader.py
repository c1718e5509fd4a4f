"""Reading model files (TOML or JSON) into records and domain objects."""

from __future__ import annotations

import json
import logging
import re
import tomllib
from pathlib import Path
from typing import Any

from pydantic import ValidationError

from sullivan_kit.errors import ModelParseError, ModelValidationError
from sullivan_kit.fibrations import RelativeSullivan
from sullivan_kit.formats.converters import (
    model_record_to_relative,
    model_record_to_sullivan,
)
from sullivan_kit.formats.records import ModelRecord
from sullivan_kit.sullivan.models import SullivanAlgebra

log = logging.getLogger(__name__)

TOML_SUFFIXES = {".toml", ".model", ".rmodel"}
_TOML_POSITION = re.compile(r"\(at line (\d+), column (\d+)\)")


def _load_toml(text: str, source: str) -> dict[str, Any]:
    try:
        return tomllib.loads(text)
    except tomllib.TOMLDecodeError as error:
        message = str(error)
        position = _TOML_POSITION.search(message)
        raise ModelParseError(
            _TOML_POSITION.sub("", message).strip(),
            line=int(position.group(1)) if position else None,
            column=int(position.group(2)) if position else None,
            source=source,
        ) from error


def _load_json(text: str, source: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as error:
        raise ModelParseError(
            error.msg, line=error.lineno, column=error.colno, source=source
        ) from error


def loads_record(text: str, source: str = "<string>", fmt: str | None = None) -> ModelRecord:
    """Parse a model record; `fmt` is "json" or "toml", sniffed from the text if omitted."""
    if fmt is None:
        fmt = "json" if text.lstrip().startswith("{") else "toml"
    data = _load_json(text, source) if fmt == "json" else _load_toml(text, source)
    try:
        return ModelRecord.model_validate(data)
    except ValidationError as error:
        problems = "; ".join(
            f"{'.'.join(str(p) for p in e['loc']) or 'record'}: {e['msg']}"
            for e in error.errors()
        )
        raise ModelValidationError(f"{source}: {problems}", invariant="schema") from error


def load_record(path: Path) -> ModelRecord:
    suffix = path.suffix.lower()
    fmt = "json" if suffix == ".json" else "toml" if suffix in TOML_SUFFIXES else None
    log.debug(f"Loading model file {path} as {fmt or 'sniffed format'}")
    return loads_record(path.read_text(), source=str(path), fmt=fmt)


def load_model(path: Path) -> SullivanAlgebra:
    record = load_record(path)
    return model_record_to_sullivan(record, source=str(path))


def load_relative(path: Path) -> RelativeSullivan:
    record = load_record(path)
    return model_record_to_relative(record, source=str(path))


def dumps_record(record: ModelRecord) -> str:
    return record.model_dump_json(indent=2, exclude_none=True) + "\n"
