import typing
from typing import Any, List, Type, TypeVar

from qrac_lab.documents.ProtocolParts import Document, Options, Required
from qrac_lab.errors import DocumentFormatError
from qrac_lab.utils.logging import get_logger

T = TypeVar('T')


def _child(path: str, key: Any) -> str:
    if isinstance(key, int):
        return f"{path}[{key}]"
    return f"{path}.{key}"


def _type_name(dtype: Any) -> str:
    return getattr(dtype, "__name__", None) or str(dtype)


class DocumentParser():
    """Parses JSON documents into schema objects.

    Every schema is a Document subclass whose class attributes are
    Required / Optional markers. Failures raise DocumentFormatError
    carrying the JSON path of the offending value.
    """

    def try_parse(self, value: Any, dtypes: List[Any], path: str = "$"):
        """Parses value into the first of the given types that fits.

        Dictionaries only try schemas whose required fields are all
        present. Returns None if nothing fits.
        """
        for dtype in dtypes:
            if isinstance(value, dict) and isinstance(dtype, type) and issubclass(dtype, Document):
                if not all(name in value for name in dtype.required_fields()):
                    continue
            try:
                return self.parse_value(value, dtype, path)
            except DocumentFormatError:
                get_logger(__name__).log(5, f"{path} is not a {_type_name(dtype)}")
        return None

    def parse_value(self, value: Any, dtype: Any, path: str = "$"):
        if isinstance(dtype, Options):
            parsed = self.try_parse(value, dtype.dtypes, path)
            if parsed is None:
                raise DocumentFormatError(
                    f"value could not be parsed to any of "
                    f"{[_type_name(option) for option in dtype.dtypes]}",
                    path=path
                )
            return parsed

        origin = typing.get_origin(dtype)
        if origin is list:
            if not isinstance(value, list):
                raise DocumentFormatError("expected a list", path=path)
            (element_type,) = typing.get_args(dtype)
            return [
                self.parse_value(element, element_type, _child(path, k))
                for k, element in enumerate(value)
            ]
        if origin is dict:
            if not isinstance(value, dict):
                raise DocumentFormatError("expected an object", path=path)
            key_type, value_type = typing.get_args(dtype)
            parsed = {}
            for key, element in value.items():
                try:
                    parsed_key = key_type(key)
                except ValueError:
                    raise DocumentFormatError(
                        f"key {key!r} is not a {_type_name(key_type)}",
                        path=path
                    )
                parsed[parsed_key] = self.parse_value(
                    element, value_type, _child(path, key)
                )
            return parsed

        if isinstance(dtype, type) and issubclass(dtype, Document):
            if not isinstance(value, dict):
                raise DocumentFormatError(
                    f"expected an object describing a {dtype.__name__}",
                    path=path
                )
            return self.parse_document(value, dtype, path)
        return self._parse_scalar(value, dtype, path)

    def _parse_scalar(self, value: Any, dtype: Type, path: str):
        # JSON booleans are ints in Python; never accept them as numbers
        if isinstance(value, bool) and dtype is not bool:
            raise DocumentFormatError(f"expected {_type_name(dtype)}, got a boolean", path=path)
        if dtype is float and isinstance(value, (int, float)):
            return float(value)
        if dtype is int and isinstance(value, int):
            return value
        if dtype is int and isinstance(value, float) and value.is_integer():
            return int(value)
        if dtype in (str, bool) and isinstance(value, dtype):
            return value
        raise DocumentFormatError(
            f"expected {_type_name(dtype)}, got {type(value).__name__}",
            path=path
        )

    def parse_document(self, document: Any, dtype: Type[T], path: str = "$") -> T:
        """Parses a JSON object into an instance of the schema dtype.

        Raises:
            DocumentFormatError: not an object, missing required field,
            null where not nullable or a field of the wrong shape
        """
        if not isinstance(document, dict):
            raise DocumentFormatError(
                f"expected an object describing a {dtype.__name__}", path=path
            )
        obj = dtype()
        for field_name, marker in dtype.fields().items():
            field_path = _child(path, field_name)
            get_logger(__name__).log(
                5, f"parsing field '{field_path}' to designated type '{_type_name(marker.dtype)}'"
            )
            if field_name not in document:
                if isinstance(marker, Required):
                    raise DocumentFormatError(
                        f"missing required field '{field_name}'", path=path
                    )
                setattr(obj, field_name, marker.default)
                continue

            value = document[field_name]
            if value is None:
                if not marker.nullable:
                    raise DocumentFormatError(
                        f"field '{field_name}' must not be null", path=field_path
                    )
                setattr(obj, field_name, None)
                continue
            setattr(obj, field_name, self.parse_value(value, marker.dtype, field_path))
        get_logger(__name__).log(5, f"parsed {dtype.__name__}: {obj.__dict__}")
        return obj
