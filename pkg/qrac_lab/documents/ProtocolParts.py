from typing import Any, List


class Required():

    def __init__(self, dtype: Any, nullable: bool = False):
        self.dtype = dtype
        self.nullable = nullable


class Optional():

    def __init__(self, dtype: Any, nullable: bool = False, default: Any = None):
        self.dtype = dtype
        self.nullable = nullable
        self.default = default


class Options():
    """Value may take any of the listed shapes, the first one that fits
    wins"""

    def __init__(self, dtypes: List[Any]):
        self.dtypes = dtypes


class Document():
    """Base of all document schemas. Fields are declared as class
    attributes holding Required or Optional markers."""

    @classmethod
    def fields(cls):
        return {
            name: marker
            for klass in reversed(cls.__mro__)
            for name, marker in vars(klass).items()
            if isinstance(marker, (Required, Optional))
        }

    @classmethod
    def required_fields(cls) -> List[str]:
        return [
            name for name, marker in cls.fields().items()
            if isinstance(marker, Required)
        ]
