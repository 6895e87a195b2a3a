from .DocumentParser import DocumentParser
from .mappers import (
    load_automaton,
    load_scheme,
    load_pad_family,
    load_covering_code,
    qfa_to_document,
    dfa_to_document,
    scheme_to_document,
    operator_to_document,
)

__all__ = [
    DocumentParser,
    load_automaton,
    load_scheme,
    load_pad_family,
    load_covering_code,
    qfa_to_document,
    dfa_to_document,
    scheme_to_document,
    operator_to_document
]
