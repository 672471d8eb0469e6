"""INI-style scenario/config file access with field-named validation errors.

Both the link-budget and the field-simulator scenario files use the same
structured key-value format (configparser syntax, '#' or ';' comments).
Field names carry their units (``tx_power_dbm``, ``surface_decay_length_m``)
so a file is readable without a manual.
"""

from __future__ import annotations

import configparser
from pathlib import Path

from .errors import ValidationError

__all__ = ["ConfigFile", "load_config"]


class ConfigFile:
    """Typed accessors over one parsed INI file.

    Every accessor raises :class:`ValidationError` naming the offending
    ``section.key`` on missing or malformed values.
    """

    def __init__(self, parser: configparser.ConfigParser, source: str):
        self._parser = parser
        self.source = source

    def has(self, section: str, key: str) -> bool:
        return self._parser.has_option(section, key)

    def has_section(self, section: str) -> bool:
        return self._parser.has_section(section)

    def sections(self) -> list[str]:
        return self._parser.sections()

    def _raw(self, section: str, key: str) -> str:
        if not self._parser.has_section(section):
            raise ValidationError(f"{section}", f"missing section in {self.source}")
        if not self._parser.has_option(section, key):
            raise ValidationError(f"{section}.{key}", f"missing key in {self.source}")
        return self._parser.get(section, key)

    def get_str(self, section: str, key: str, default: str | None = None) -> str:
        if default is not None and not self.has(section, key):
            return default
        return self._raw(section, key).strip()

    def get_float(self, section: str, key: str, default: float | None = None) -> float:
        if default is not None and not self.has(section, key):
            return default
        raw = self._raw(section, key)
        try:
            return float(raw)
        except ValueError:
            raise ValidationError(f"{section}.{key}", f"not a number: {raw!r}") from None

    def get_int(self, section: str, key: str, default: int | None = None) -> int:
        if default is not None and not self.has(section, key):
            return default
        raw = self._raw(section, key)
        try:
            return int(raw)
        except ValueError:
            raise ValidationError(f"{section}.{key}", f"not an integer: {raw!r}") from None

    def get_bool(self, section: str, key: str, default: bool | None = None) -> bool:
        if default is not None and not self.has(section, key):
            return default
        raw = self._raw(section, key).strip().lower()
        if raw in ("true", "yes", "on", "1"):
            return True
        if raw in ("false", "no", "off", "0"):
            return False
        raise ValidationError(f"{section}.{key}", f"not a boolean: {raw!r}")

    def get_float_list(self, section: str, key: str) -> list[float]:
        raw = self._raw(section, key)
        items = [s for s in (t.strip() for t in raw.split(",")) if s]
        if not items:
            raise ValidationError(f"{section}.{key}", "empty list")
        try:
            return [float(s) for s in items]
        except ValueError:
            raise ValidationError(
                f"{section}.{key}", f"not a comma-separated number list: {raw!r}"
            ) from None


def load_config(path: str | Path) -> ConfigFile:
    """Parse an INI config file; missing file is a validation error."""
    p = Path(path)
    if not p.is_file():
        raise ValidationError("config", "not found")
    parser = configparser.ConfigParser(inline_comment_prefixes=("#", ";"))
    try:
        with open(p, "r", encoding="utf-8") as fh:
            parser.read_file(fh)
    except configparser.Error as exc:
        raise ValidationError("config", f"parse failure: {exc}") from None
    return ConfigFile(parser, source=str(p))
