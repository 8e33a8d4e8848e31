"""JSON files holding a structure table f or a cocycle table omega."""

from __future__ import annotations

import json
import os
import sys
import tempfile
from dataclasses import dataclass

from ..central import TableCocycle
from ..field import MODES, to_literal
from ..witt import IndexWindow, Table
from .literal import LiteralError, parse_scalar

FORMAT_VERSION = 1
ROLES = ("structure", "omega")


class TableFormatError(ValueError):
    """The document is not a valid table file."""


@dataclass
class TableFile:
    role: str
    field: str
    window: IndexWindow
    entries: dict

    def structure(self) -> Table:
        return Table(self.entries, self.window, self.field)

    def cocycle(self) -> TableCocycle:
        return TableCocycle(self.entries, self.window, self.field)


def dumps(role: str, field: str, window: IndexWindow, entries: dict) -> str:
    doc = {
        "format_version": FORMAT_VERSION,
        "role": role,
        "field": field,
        "window": window.N,
        "entries": [
            {"m": m, "n": n, "value": to_literal(v)} for (m, n), v in sorted(entries.items())
        ],
    }
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


def write(path, role: str, field: str, window: IndexWindow, entries: dict) -> None:
    """Write atomically (temp file + rename); ``-`` means stdout."""
    text = dumps(role, field, window, entries)
    if str(path) == "-":
        sys.stdout.write(text)
        return
    path = os.fspath(path)
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-", suffix=".json")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _int(x, what):
    if isinstance(x, bool) or not isinstance(x, int):
        raise TableFormatError(f"{what} must be an integer, got {x!r}")
    return x


def loads(text: str, field_override: str | None = None) -> TableFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TableFormatError(f"malformed JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise TableFormatError("top level must be an object")
    if doc.get("format_version") != FORMAT_VERSION:
        raise TableFormatError(f"unsupported format_version {doc.get('format_version')!r}")
    role = doc.get("role")
    if role not in ROLES:
        raise TableFormatError(f"role must be one of {ROLES}, got {role!r}")
    field = doc.get("field")
    if field not in MODES:
        raise TableFormatError(f"field must be one of {MODES}, got {field!r}")
    if field_override:
        field = field_override
    N = _int(doc.get("window"), "window")
    try:
        window = IndexWindow(N)
    except ValueError as exc:
        raise TableFormatError(str(exc)) from None
    raw = doc.get("entries")
    if not isinstance(raw, list):
        raise TableFormatError("entries must be a list")
    entries = {}
    for item in raw:
        if not isinstance(item, dict) or set(item) != {"m", "n", "value"}:
            raise TableFormatError(f"entry must have exactly m, n, value: {item!r}")
        m, n = _int(item["m"], "m"), _int(item["n"], "n")
        if m not in window or n not in window:
            raise TableFormatError(f"entry ({m},{n}) outside window N={N}")
        if (m, n) in entries:
            raise TableFormatError(f"duplicate entry ({m},{n})")
        try:
            entries[(m, n)] = parse_scalar(item["value"], field)
        except LiteralError as exc:
            raise TableFormatError(f"entry ({m},{n}): {exc}") from None
        except (ArithmeticError, TypeError) as exc:
            raise TableFormatError(f"entry ({m},{n}): {exc}") from None
    if role == "structure" and len(entries) != len(window) ** 2:
        missing = next(p for p in window.pairs() if p not in entries)
        raise TableFormatError(f"structure table must cover the window; missing {missing}")
    return TableFile(role, field, window, entries)


def read(path, field_override: str | None = None) -> TableFile:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise TableFormatError(f"cannot read {path}: {exc.strerror}") from None
    return loads(text, field_override)
