from typing import Optional


class InfeasibleParametersError(ValueError):
    """Parameters outside the range an operation can evaluate (size guards,
    vacuous success probabilities, even majority sizes, ...)."""


class VerificationError(RuntimeError):
    """A construction could not be certified (retry cap exhausted, automaton
    not restricted, ...)."""


class DocumentFormatError(ValueError):
    """A JSON document does not match its schema."""

    def __init__(self, message: str, path: Optional[str] = None):
        self.path = path
        if path is not None:
            message = f"{path}: {message}"
        super().__init__(message)
