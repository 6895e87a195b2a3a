from .Symbols import Symbols
from .ExitCodes import ExitCodes
from .OutputFormat import OutputFormat
from .Quadrant import Quadrant
from .HaltingLabel import HaltingLabel

__all__ = [
    Symbols,
    ExitCodes,
    OutputFormat,
    Quadrant,
    HaltingLabel
]
