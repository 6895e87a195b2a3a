import json

import numpy as np
import pytest

from qrac_lab.crac import build_pad_family, exact_success, greedy_covering_code, pad_scheme
from qrac_lab.documents import (
    DocumentParser,
    load_automaton,
    load_covering_code,
    load_pad_family,
    load_scheme,
    qfa_to_document,
    dfa_to_document,
    scheme_to_document,
)
from qrac_lab.documents.document_models import Operator, QfaDocument, SchemeDocument
from qrac_lab.errors import DocumentFormatError
from qrac_lab.model import Dfa, Qfa, QracScheme, SerialScheme
from qrac_lab.qfa import dfa_Ln, rfa_Ln, run, serial_from_qfa
from qrac_lab.qrac import qrac_2to1, qrac_3to1, success_probability
from qrac_lab.utils.ios import write_file

from conftest import words


def test_parser_reads_operators_in_both_shapes():
    parser = DocumentParser()
    permutation = parser.parse_value({"images": [1, 0]}, Operator)
    assert permutation.images == [1, 0]
    matrix = parser.parse_value([[0, 1], [[1, 0], 0.0]], Operator)
    assert matrix == [[0.0, 1.0], [[1.0, 0.0], 0.0]]


def test_parser_rejects_booleans_as_numbers():
    with pytest.raises(DocumentFormatError):
        DocumentParser().parse_value(True, int)


def test_parser_fills_optional_defaults():
    document = scheme_to_document(qrac_2to1())
    for key in ("kind", "name", "ancilla", "weights"):
        del document[key]
    parsed = DocumentParser().parse_document(document, SchemeDocument)
    assert parsed.kind == "qrac"
    assert parsed.ancilla == 0
    assert parsed.name == ""
    assert parsed.weights is None


def test_qfa_round_trip(toy_qfa):
    document = json.loads(json.dumps(qfa_to_document(toy_qfa)))
    restored = load_automaton(document)
    assert isinstance(restored, Qfa)
    assert restored.states == toy_qfa.states
    for word in words("ab", 4):
        expected, actual = run(toy_qfa, word), run(restored, word)
        assert actual.p_accept == pytest.approx(expected.p_accept)
        assert actual.p_reject == pytest.approx(expected.p_reject)


def test_permutation_unitaries_stay_permutations():
    document = qfa_to_document(rfa_Ln(2))
    assert all("images" in unitary for unitary in document["unitaries"].values())
    restored = load_automaton(document)
    assert all(u.is_permutation for u in restored.unitaries.values())


def test_dfa_round_trip_from_file(tmp_path):
    path = tmp_path / "dfa.json"
    write_file(dfa_to_document(dfa_Ln(3)), str(path))
    restored = load_automaton(str(path))
    assert isinstance(restored, Dfa)
    assert len(restored.states) == 9
    for word in words("ab", 6):
        assert restored.accepts(word) == dfa_Ln(3).accepts(word)


@pytest.mark.parametrize("scheme", [qrac_2to1(), qrac_3to1()], ids=lambda s: s.name)
def test_qrac_scheme_round_trip(scheme):
    restored = load_scheme(json.loads(json.dumps(scheme_to_document(scheme))))
    assert isinstance(restored, QracScheme)
    expected, _ = success_probability(scheme)
    actual, _ = success_probability(restored)
    assert actual == pytest.approx(expected)


def test_serial_scheme_round_trip():
    scheme = serial_from_qfa(rfa_Ln(2), 2)
    restored = load_scheme(scheme_to_document(scheme))
    assert isinstance(restored, SerialScheme)
    assert set(restored.decoders) == set(scheme.decoders)
    assert success_probability(restored)[0] == pytest.approx(1.0)


def test_pad_family_and_code_from_an_exported_build(tmp_path):
    build = build_pad_family(6, 0.6, seed=7)
    path = tmp_path / "build.json"
    write_file(build, str(path))
    document = json.loads(path.read_text(encoding="utf-8"))
    family = load_pad_family(document["family"])
    code = load_covering_code(document["code"])
    assert family == build.family
    assert code == build.code
    minimum, _ = exact_success(pad_scheme(family, code))
    assert minimum == pytest.approx(build.table.minimum)


def test_pad_family_length_mismatch():
    document = {"m": 2, "ell": 2, "pads": [{"permutation": [0, 1], "mask": "00"}]}
    with pytest.raises(DocumentFormatError, match=r"\$\.ell"):
        load_pad_family(document)


def test_covering_code_must_cover():
    code = greedy_covering_code(4, 1).to_dict()
    assert load_covering_code(code).codewords == tuple(code["codewords"])
    with pytest.raises(DocumentFormatError, match="farther than 1"):
        load_covering_code({"m": 4, "radius": 1, "codewords": ["0000", "1111"]})


def test_missing_field_is_reported():
    document = qfa_to_document(rfa_Ln(1))
    del document["start"]
    with pytest.raises(DocumentFormatError, match="missing required field 'start'"):
        load_automaton(document)


def test_non_unitary_operator_names_its_path(toy_qfa):
    document = qfa_to_document(toy_qfa)
    document["unitaries"]["a"] = np.full((4, 4), 0.5).tolist()
    with pytest.raises(DocumentFormatError) as info:
        load_automaton(document)
    assert info.value.path == "$.unitaries.a"


def test_bad_complex_entry_names_its_path(toy_qfa):
    document = qfa_to_document(toy_qfa)
    document["unitaries"]["b"][2][1] = "one"
    with pytest.raises(DocumentFormatError, match=r"\$\.unitaries\.b"):
        load_automaton(document)


def test_qrac_decoders_must_cover_every_bit():
    document = scheme_to_document(qrac_2to1())
    document["decoders"] = document["decoders"][:1]
    with pytest.raises(DocumentFormatError, match=r"\$\.decoders"):
        load_scheme(document)


def test_unknown_scheme_kind():
    document = scheme_to_document(qrac_2to1())
    document["kind"] = "hybrid"
    with pytest.raises(DocumentFormatError, match=r"\$\.kind"):
        load_scheme(document)


def test_automaton_needs_a_known_shape():
    with pytest.raises(DocumentFormatError):
        load_automaton({"states": ["q"]})
    with pytest.raises(DocumentFormatError):
        DocumentParser().parse_document([], QfaDocument)


def test_invalid_json_file(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{\"states\": [", encoding="utf-8")
    with pytest.raises(DocumentFormatError, match="not valid JSON"):
        load_automaton(str(path))


C, S = np.cos(np.pi / 8), np.sin(np.pi / 8)
R = 1 / np.sqrt(2)


def hand_written_2to1():
    return {
        "m": 2,
        "n": 1,
        "states": {
            "00": [[[C, 0.0], [S, 0.0]]],
            "01": [[[C, 0.0], [-S, 0.0]]],
            "10": [[[S, 0.0], [C, 0.0]]],
            "11": [[[-S, 0.0], [C, 0.0]]],
        },
        "decoders": [
            [[[0.0, 0.0], [1.0, 0.0]]],
            [[[-R, 0.0], [R, 0.0]]],
        ],
    }


def test_scheme_from_outcome_one_bases():
    scheme = load_scheme(hand_written_2to1())
    assert isinstance(scheme, QracScheme)
    assert scheme.weights == (1.0,)
    minimum, table = success_probability(scheme)
    assert minimum == pytest.approx(C ** 2)
    for _, _, p in table.rows():
        assert p == pytest.approx(C ** 2)


def test_outcome_one_bases_survive_export():
    document = hand_written_2to1()
    exported = scheme_to_document(load_scheme(document))
    assert exported["kind"] == "qrac"
    assert exported["weights"] == [1.0]
    assert exported["states"] == document["states"]
    assert exported["decoders"] == document["decoders"]


@pytest.mark.parametrize("scheme", [qrac_2to1(), qrac_3to1()], ids=lambda s: s.name)
def test_scheme_json_text_is_stable(scheme):
    first = json.dumps(scheme_to_document(scheme))
    second = json.dumps(scheme_to_document(load_scheme(json.loads(first))))
    assert second == first


def test_outcome_one_basis_of_the_wrong_dimension():
    document = hand_written_2to1()
    document["decoders"][1] = [[[1.0, 0.0], [0.0, 0.0], [0.0, 0.0]]]
    with pytest.raises(DocumentFormatError, match=r"\$\.decoders\[1\]"):
        load_scheme(document)


def test_outcome_one_basis_must_be_orthonormal():
    document = hand_written_2to1()
    document["decoders"][1] = [[[1.0, 0.0], [0.0, 0.0]], [[R, 0.0], [R, 0.0]]]
    with pytest.raises(DocumentFormatError, match=r"\$\.decoders\[1\]"):
        load_scheme(document)


def test_serial_decoders_need_full_measurements():
    document = scheme_to_document(serial_from_qfa(rfa_Ln(1), 1))
    document["decoders"][0] = [[[1.0, 0.0]] + [[0.0, 0.0]] * (2 ** document["n"] - 1)]
    with pytest.raises(DocumentFormatError, match=r"\$\.decoders\[0\]"):
        load_scheme(document)


def test_automaton_documents_use_accept_and_reject(toy_qfa):
    document = qfa_to_document(toy_qfa)
    assert set(document) == {"name", "states", "accept", "reject", "start", "alphabet", "unitaries"}
    assert set(document["accept"]) == set(toy_qfa.accepting)
    assert set(dfa_to_document(dfa_Ln(1))) == {"name", "states", "start", "accept", "alphabet", "transitions"}
