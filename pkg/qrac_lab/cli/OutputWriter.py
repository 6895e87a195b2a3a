from fractions import Fraction
from typing import Any, List, Optional

import numpy as np

from qrac_lab.cli.CommandResult import CommandResult
from qrac_lab.constants import OutputFormat
from qrac_lab.utils.ios import dump_csv, dump_json
from qrac_lab.utils.logging import get_logger

FLOAT_FORMAT = "{:.7f}"


def cell(value: Any) -> str:
    """Text of one table or CSV cell"""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (float, np.floating, Fraction)):
        return FLOAT_FORMAT.format(float(value))
    if isinstance(value, (list, tuple)):
        return "; ".join(cell(element) for element in value)
    if value is None:
        return "-"
    return str(value)


def _aligned(header: List[str], rows: List[List[Any]]) -> List[str]:
    cells = [list(header)] + [[cell(value) for value in row] for row in rows]
    widths = [max(len(line[k]) for line in cells) for k in range(len(header))]
    return [
        "  ".join(text.ljust(width) for text, width in zip(line, widths)).rstrip()
        for line in cells
    ]


class OutputWriter:
    """Renders command results as aligned text, CSV or JSON and writes
    them to stdout or a file"""

    def __init__(self, format: OutputFormat = OutputFormat.TABLE, output: Optional[str] = None):
        self.format = format
        self.output = output

    def render(self, result: CommandResult) -> str:
        if self.format == OutputFormat.JSON:
            return dump_json(result)
        if self.format == OutputFormat.CSV:
            if result.header:
                return dump_csv(result.header, [[cell(v) for v in row] for row in result.rows])
            return dump_csv(
                ["key", "value"],
                [[key, cell(value)] for key, value in result.summary.items()]
            )

        lines = [f"# {result.title}"]
        lines += [f"{key}: {cell(value)}" for key, value in result.summary.items()]
        if result.header:
            lines.append("")
            lines += _aligned(result.header, result.rows)
        return "\n".join(lines) + "\n"

    def write(self, result: CommandResult, stream):
        text = self.render(result)
        if self.output is None:
            stream.write(text)
            return
        with open(self.output, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        get_logger(__name__).info(f"wrote {self.format.value} output to {self.output}")
