import csv
import io
import json
from typing import Any, Iterable, Sequence

from qrac_lab.errors import DocumentFormatError
from qrac_lab.utils.ResultEncoder import ResultEncoder


def parse_file(path: str) -> Any:
    """Reads a JSON document from disk"""
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except json.JSONDecodeError as e:
        raise DocumentFormatError(
            f"not valid JSON (line {e.lineno}, column {e.colno}): {e.msg}",
            path="$"
        )


def dump_json(msg: Any) -> str:
    return json.dumps(msg, cls=ResultEncoder, sort_keys=True, indent=2) + "\n"


def write_file(msg: Any, path: str):
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write(dump_json(msg))


def dump_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    """Renders rows as RFC-4180 CSV with a header row"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\r\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)
    return buffer.getvalue()
