from .CommandInterpreter import CommandInterpreter
from .CommandResult import CommandResult
from .OutputWriter import OutputWriter

__all__ = [
    CommandInterpreter,
    CommandResult,
    OutputWriter
]
