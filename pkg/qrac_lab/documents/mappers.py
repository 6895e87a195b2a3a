from typing import Any, Dict, List, Union

import numpy as np

from qrac_lab.documents.DocumentParser import DocumentParser
from qrac_lab.documents.document_models import (
    CoveringCodeDocument,
    DfaDocument,
    MeasurementDocument,
    PadFamilyDocument,
    PermutationDocument,
    QfaDocument,
    SchemeDocument,
)
from qrac_lab.errors import DocumentFormatError
from qrac_lab.model import (
    CoveringCode,
    Dfa,
    Pad,
    PadFamily,
    ProjectiveMeasurement,
    Qfa,
    QracScheme,
    SerialScheme,
    StateVector,
    UnitaryOp,
)
from qrac_lab.utils.ios import parse_file

SCHEME_KINDS = ("qrac", "serial")


def _complex(value, path: str) -> complex:
    if isinstance(value, list):
        if len(value) != 2:
            raise DocumentFormatError("complex numbers are [re, im] pairs", path=path)
        return complex(value[0], value[1])
    return complex(value)


def _complex_array(values, path: str) -> np.ndarray:
    return np.array(
        [_complex(value, f"{path}[{k}]") for k, value in enumerate(values)],
        dtype=complex
    )


def _operator(value, path: str) -> UnitaryOp:
    try:
        if isinstance(value, PermutationDocument):
            return UnitaryOp.from_permutation(value.images)
        rows = [_complex_array(row, f"{path}[{k}]") for k, row in enumerate(value)]
        return UnitaryOp.from_matrix(np.array(rows) if rows else np.zeros((0, 0)))
    except DocumentFormatError:
        raise
    except ValueError as e:
        raise DocumentFormatError(str(e), path=path)


def _built(factory, *args, path: str = "$", **kwargs):
    """Runs a model constructor and reports its validation errors as
    document errors"""
    try:
        return factory(*args, **kwargs)
    except DocumentFormatError:
        raise
    except ValueError as e:
        raise DocumentFormatError(str(e), path=path)


def qfa_from_document(doc: QfaDocument) -> Qfa:
    unitaries = {
        symbol: _operator(value, f"$.unitaries.{symbol}")
        for symbol, value in doc.unitaries.items()
    }
    return _built(
        Qfa,
        states=doc.states,
        accepting=doc.accept,
        rejecting=doc.reject,
        start=doc.start,
        alphabet=doc.alphabet,
        unitaries=unitaries,
        name=doc.name
    )


def dfa_from_document(doc: DfaDocument) -> Dfa:
    transitions = {
        (state, letter): target
        for state, row in doc.transitions.items()
        for letter, target in row.items()
    }
    return _built(
        Dfa,
        states=doc.states,
        start=doc.start,
        accepting=doc.accept,
        alphabet=doc.alphabet,
        transitions=transitions,
        name=doc.name
    )


def _measurement(doc: MeasurementDocument, path: str) -> ProjectiveMeasurement:
    return _built(
        ProjectiveMeasurement,
        _operator(doc.frame, f"{path}.frame"),
        tuple((outcome.label, tuple(outcome.indices)) for outcome in doc.outcomes),
        path=path
    )


def _decoder(value, bit: int, dimension: int, path: str):
    """(bit, suffix, measurement) of a decoder entry: a full measurement
    document, or the outcome-1 basis of the binary decoder of bit k where
    k is the position in the list"""
    if isinstance(value, MeasurementDocument):
        return value.bit, value.suffix or "", _measurement(value, path)
    columns = [
        _complex_array(vector, f"{path}[{k}]") for k, vector in enumerate(value)
    ]
    for k, column in enumerate(columns):
        if column.size != dimension:
            raise DocumentFormatError(
                f"basis vector has dimension {column.size}, expected {dimension}",
                path=f"{path}[{k}]"
            )
    basis = np.array(columns).T if columns else np.zeros((dimension, 0), dtype=complex)
    return bit, "", _built(
        ProjectiveMeasurement.binary_from_outcome_one, basis, dimension, path=path
    )


def scheme_from_document(doc: SchemeDocument) -> Union[QracScheme, SerialScheme]:
    if doc.kind not in SCHEME_KINDS:
        raise DocumentFormatError(
            f"kind must be one of {list(SCHEME_KINDS)}, got {doc.kind!r}",
            path="$.kind"
        )
    codewords = {
        x: tuple(
            _built(
                StateVector,
                _complex_array(amplitudes, f"$.states.{x}[{r}]"),
                path=f"$.states.{x}[{r}]"
            )
            for r, amplitudes in enumerate(states)
        )
        for x, states in doc.states.items()
    }
    weights = doc.weights
    if weights is None:
        randomness = max((len(states) for states in codewords.values()), default=1)
        weights = [1.0 / randomness] * randomness
    common = dict(
        m=doc.m, n=doc.n, weights=weights, codewords=codewords,
        ancilla=doc.ancilla, name=doc.name
    )
    dimension = 2 ** (doc.n + doc.ancilla)
    decoders = [
        _decoder(value, k, dimension, f"$.decoders[{k}]")
        for k, value in enumerate(doc.decoders)
    ]
    if doc.kind == "qrac":
        ordered = sorted(decoders, key=lambda decoder: decoder[0])
        if [bit for bit, _, _ in ordered] != list(range(doc.m)):
            raise DocumentFormatError(
                f"qrac schemes need exactly one decoder per bit 0..{doc.m - 1}",
                path="$.decoders"
            )
        return _built(QracScheme, decoders=[pm for _, _, pm in ordered], **common)
    for k, value in enumerate(doc.decoders):
        if not isinstance(value, MeasurementDocument):
            raise DocumentFormatError(
                "serial decoders need a bit, a suffix and a full measurement",
                path=f"$.decoders[{k}]"
            )
    return _built(
        SerialScheme,
        decoders={(bit, suffix): pm for bit, suffix, pm in decoders},
        **common
    )


def covering_code_from_document(doc: CoveringCodeDocument) -> CoveringCode:
    return _built(CoveringCode, m=doc.m, radius=doc.radius, codewords=doc.codewords)


def pad_family_from_document(doc: PadFamilyDocument) -> PadFamily:
    if doc.ell is not None and doc.ell != len(doc.pads):
        raise DocumentFormatError(
            f"ell is {doc.ell} but {len(doc.pads)} pads are listed", path="$.ell"
        )
    pads = [
        _built(Pad, pad.permutation, pad.mask, path=f"$.pads[{k}]")
        for k, pad in enumerate(doc.pads)
    ]
    return _built(PadFamily, doc.m, pads)


def _load(source: Union[str, Dict[str, Any]]) -> Dict[str, Any]:
    document = parse_file(source) if isinstance(source, str) else source
    if not isinstance(document, dict):
        raise DocumentFormatError("expected a JSON object", path="$")
    return document


def load_automaton(source: Union[str, Dict[str, Any]]) -> Union[Qfa, Dfa]:
    """Reads a quantum automaton (has unitaries) or a deterministic one
    (has transitions) from a file path or a parsed document"""
    document = _load(source)
    parser = DocumentParser()
    if "unitaries" in document:
        return qfa_from_document(parser.parse_document(document, QfaDocument))
    if "transitions" in document:
        return dfa_from_document(parser.parse_document(document, DfaDocument))
    raise DocumentFormatError(
        "automaton documents need either 'unitaries' or 'transitions'", path="$"
    )


def load_scheme(source: Union[str, Dict[str, Any]]) -> Union[QracScheme, SerialScheme]:
    return scheme_from_document(
        DocumentParser().parse_document(_load(source), SchemeDocument)
    )


def load_pad_family(source: Union[str, Dict[str, Any]]) -> PadFamily:
    return pad_family_from_document(
        DocumentParser().parse_document(_load(source), PadFamilyDocument)
    )


def load_covering_code(source: Union[str, Dict[str, Any]]) -> CoveringCode:
    return covering_code_from_document(
        DocumentParser().parse_document(_load(source), CoveringCodeDocument)
    )


def _pairs(values: np.ndarray) -> List[List[float]]:
    return [[float(value.real), float(value.imag)] for value in values]


def operator_to_document(u: UnitaryOp):
    if u.is_permutation:
        return {"images": [int(k) for k in u.images]}
    return [_pairs(row) for row in u.matrix]


def qfa_to_document(a: Qfa) -> Dict[str, Any]:
    return {
        "name": a.name,
        "states": list(a.states),
        "accept": [q for q in a.states if q in a.accepting],
        "reject": [q for q in a.states if q in a.rejecting],
        "start": a.start,
        "alphabet": list(a.alphabet),
        "unitaries": {
            symbol: operator_to_document(u) for symbol, u in a.unitaries.items()
        }
    }


def dfa_to_document(a: Dfa) -> Dict[str, Any]:
    transitions = {state: {} for state in a.states}
    for (state, letter), target in a.transitions.items():
        transitions[state][letter] = target
    return {
        "name": a.name,
        "states": list(a.states),
        "start": a.start,
        "accept": [q for q in a.states if q in a.accepting],
        "alphabet": list(a.alphabet),
        "transitions": transitions
    }


def _measurement_to_document(pm: ProjectiveMeasurement, bit: int, suffix=None):
    return {
        "bit": bit,
        "suffix": suffix,
        "frame": operator_to_document(pm.frame),
        "outcomes": [
            {"label": label, "indices": list(indices)}
            for label, indices in pm.outcomes
        ]
    }


def scheme_to_document(s: Union[QracScheme, SerialScheme]) -> Dict[str, Any]:
    """qrac decoders are written as outcome-1 bases, serial ones as full
    measurements keyed by bit and suffix"""
    if isinstance(s, QracScheme):
        kind = "qrac"
        decoders = [[_pairs(column) for column in pm.basis(1).T] for pm in s.decoders]
    else:
        kind = "serial"
        decoders = [
            _measurement_to_document(pm, i, suffix)
            for (i, suffix), pm in sorted(s.decoders.items())
        ]
    return {
        "kind": kind,
        "name": s.name,
        "m": s.m,
        "n": s.n,
        "ancilla": s.ancilla,
        "weights": list(s.weights),
        "states": {
            x: [_pairs(state.amplitudes) for state in states]
            for x, states in sorted(s.codewords.items())
        },
        "decoders": decoders
    }
