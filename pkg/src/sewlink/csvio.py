"""Deterministic CSV writing and the matching reader.

Floats are serialized with ``repr`` (shortest round-trip decimal), so a
written file parses back to bit-identical values and repeated runs of the
same scenario produce byte-identical output.  Comment lines are prefixed
'#' and carry provenance (tool version, scenario hash); the reader skips
them.
"""

from __future__ import annotations

import hashlib
from pathlib import Path
from typing import Iterable, Sequence, TextIO

__all__ = ["format_cell", "write_csv", "read_csv", "content_hash", "provenance_comments"]


def format_cell(value: object) -> str:
    """Shortest round-trip text for one cell; bools become 0/1."""
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_csv(
    dest: str | Path | TextIO,
    header: Sequence[str],
    rows: Iterable[Sequence[object]],
    comments: Sequence[str] = (),
) -> None:
    """Write a comment block, a header row, and data rows.

    ``dest`` may be a path or an open text stream (e.g. sys.stdout).
    """
    own = isinstance(dest, (str, Path))
    fh: TextIO = open(dest, "w", encoding="utf-8", newline="") if own else dest  # type: ignore[arg-type]
    try:
        for line in comments:
            fh.write(f"# {line}\n")
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(format_cell(v) for v in row) + "\n")
    finally:
        if own:
            fh.close()


def read_csv(src: str | Path | TextIO) -> tuple[list[str], list[list[float]]]:
    """Read a CSV written by :func:`write_csv`: (header, float rows).

    Comment lines are ignored.  Every data cell must parse as a float
    (ints and the 0/1 booleans do).
    """
    own = isinstance(src, (str, Path))
    fh: TextIO = open(src, "r", encoding="utf-8") if own else src  # type: ignore[arg-type]
    try:
        header: list[str] | None = None
        rows: list[list[float]] = []
        for line in fh:
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            if header is None:
                header = line.split(",")
                continue
            rows.append([float(cell) for cell in line.split(",")])
        if header is None:
            raise ValueError("CSV has no header row")
        return header, rows
    finally:
        if own:
            fh.close()


def content_hash(text: str) -> str:
    """Short stable hash of a config/scenario body, for provenance comments."""
    return hashlib.sha256(text.encode("utf-8")).hexdigest()[:12]


def provenance_comments(tool_version: str, scenario_text: str | None = None) -> list[str]:
    """Standard comment block: tool version plus optional scenario hash."""
    lines = [f"sewlink {tool_version}"]
    if scenario_text is not None:
        lines.append(f"scenario sha256/12 {content_hash(scenario_text)}")
    return lines
