from enum import Enum


class OutputFormat(Enum):
    TABLE = "table"
    CSV = "csv"
    JSON = "json"
