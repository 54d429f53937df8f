"""Utility functions for file input and output operations.

It includes methods to read and write text files, append to the session log, and
render the artifacts of a run (JSON documents and CSV tables) deterministically.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from pathlib import Path
from typing import TYPE_CHECKING

from .config import JSON_INDENT, SESSION_LOG

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence


def read_file(filename: str) -> list[str]:
    """Read the contents of a file and returns a list of its lines."""
    with Path(filename).open(encoding="utf-8") as file:
        return file.read().splitlines()


def write_file(filename: str, content: str = "") -> None:
    """Write content to a specified file.

    If content is not provided, the file is cleared.
    """
    with Path(filename).open("w", encoding="utf-8", newline="") as file:
        file.write(content)


def write_on_session_log(content: str) -> None:
    """Append content to the session log file."""
    with Path(SESSION_LOG).open("a", encoding="utf-8") as file:
        file.write(f"{content}\n")


def render_json(document: object) -> str:
    """Render a JSON document with sorted keys and a trailing newline."""
    return json.dumps(document, indent=JSON_INDENT, sort_keys=True) + "\n"


def render_csv(columns: Sequence[str], rows: Iterable[Sequence | dict]) -> str:
    """Render a header line plus one line per row, with Unix line endings."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        if isinstance(row, dict):
            row = [row[column] for column in columns]  # noqa: PLW2901
        writer.writerow(row)
    return buffer.getvalue()


def emit(content: str, output: str | None = None) -> None:
    """Write an artifact to a file, or to standard output when no path is given."""
    if output is None:
        sys.stdout.write(content)
        sys.stdout.flush()
        return
    write_file(output, content)
