import logging
from dataclasses import fields
from pathlib import Path
from typing import Any, Callable

from dotenv.parser import parse_stream

from chi0_emos.model.data import RunConfig
from chi0_emos.model.distribution import Family
from chi0_emos.model.error.Pipeline import InvalidRunConfigException

TRUE_WORDS = {"1", "true", "yes", "on"}
FALSE_WORDS = {"0", "false", "no", "off"}


def parse_bool(text: str) -> bool:
    word = text.strip().lower()
    if word in TRUE_WORDS:
        return True
    if word in FALSE_WORDS:
        return False
    raise ValueError(f"'{text}' is not a boolean")


def parse_families(text: str) -> tuple[Family, ...]:
    return tuple(Family.parse(item.strip()) for item in text.split(",") if item.strip())


def parse_thresholds(text: str) -> tuple[float, ...]:
    return tuple(float(item) for item in text.split(",") if item.strip())


def parse_optional_int(text: str) -> int | None:
    return None if text.strip().lower() in {"", "none"} else int(text)


CONFIG_KEYS: dict[str, Callable[[str], Any]] = {
    "data": Path,
    "output_dir": Path,
    "window": int,
    "families": parse_families,
    "thresholds": parse_thresholds,
    "seed": parse_optional_int,
    "warm_start": parse_bool,
    "abs_tol": float,
    "rel_tol": float,
    "max_subdivisions": int,
    "pit_bins": int,
    "rank_ties": str,
    "threads": parse_optional_int,
}


def _line_number(binding) -> int:
    # a binding's text starts with the blank lines before it
    text = binding.original.string
    return binding.original.line + text[: len(text) - len(text.lstrip())].count("\n")


def read_config_file(path) -> dict[str, Any]:
    """Parse a flat `key = value` file in dotenv syntax; `#` starts a comment.

    Raises:
        InvalidRunConfigException: On a line without `=`, an unknown or repeated key,
            or a value that does not convert.
    """
    path = Path(path)
    values: dict[str, Any] = {}
    with open(path, "r", encoding="utf-8") as config_file:
        for binding in parse_stream(config_file):
            number = _line_number(binding)
            if binding.error or (binding.key is not None and binding.value is None):
                raise InvalidRunConfigException(f"{path.name}:{number}: expected 'key = value'")
            if binding.key is None:
                continue
            key = binding.key
            if key not in CONFIG_KEYS:
                raise InvalidRunConfigException(f"{path.name}:{number}: unknown key '{key}'")
            if key in values:
                raise InvalidRunConfigException(f"{path.name}:{number}: '{key}' is set twice")
            try:
                values[key] = CONFIG_KEYS[key](binding.value)
            except ValueError as e:
                raise InvalidRunConfigException(f"{path.name}:{number}: invalid {key}: {e}") from e
    logging.debug(f"Read {len(values)} setting(s) from {path}")
    return values


def build_run_config(file_values: dict[str, Any] | None = None, overrides: dict[str, Any] | None = None) -> RunConfig:
    """Defaults, then config file values, then overrides; None overrides are ignored."""
    known = {f.name for f in fields(RunConfig)}
    merged: dict[str, Any] = {}
    for source in (file_values or {}, overrides or {}):
        for key, value in source.items():
            if key not in known:
                raise InvalidRunConfigException(f"Unknown setting '{key}'")
            if value is not None:
                merged[key] = value
    return RunConfig(**merged)
