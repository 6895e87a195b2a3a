from dataclasses import dataclass, field
from typing import Any, Dict, List


@dataclass
class CommandResult:
    """What a command hands to the OutputWriter

    :title: first line of the table rendering
    :summary: scalar results by name, rendered in insertion order
    :header: column names of the optional row table
    :rows: one list of cells per row
    """
    title: str
    summary: Dict[str, Any] = field(default_factory=dict)
    header: List[str] = field(default_factory=list)
    rows: List[List[Any]] = field(default_factory=list)

    def to_dict(self):
        return {
            "title": self.title,
            "summary": self.summary,
            "rows": [dict(zip(self.header, row)) for row in self.rows]
        }
