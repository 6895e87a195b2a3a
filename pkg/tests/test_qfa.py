import numpy as np
import pytest

from conftest import words
from qrac_lab.errors import InfeasibleParametersError, VerificationError
from qrac_lab.model import Dfa, Qfa, UnitaryOp
from qrac_lab.qfa import (
    dfa_as_qfa,
    dfa_Ln,
    halted_before,
    membership_Ln,
    prefix_state,
    qfa_size_report,
    restrict,
    rfa_Ln,
    run,
    serial_from_qfa,
    transcript_automaton,
    with_decision_noise,
)
from qrac_lab.qrac import success_probability


@pytest.mark.parametrize("word, expected", [
    ("a", True),
    ("ba", True),
    ("bba", True),
    ("bbba", False),
    ("ab", False),
    ("", False),
])
def test_membership_L2(word, expected):
    assert membership_Ln(2, word) is expected


def test_membership_rejects_foreign_letters():
    with pytest.raises(ValueError):
        membership_Ln(2, "abc")


@pytest.mark.parametrize("n", range(0, 9))
def test_dfa_Ln_size_and_language(n):
    dfa = dfa_Ln(n)
    assert len(dfa.states) == 2 * n + 3
    for word in words("ab", n + 2):
        assert dfa.accepts(word) == membership_Ln(n, word)


def test_dfa_requires_total_transitions():
    with pytest.raises(ValueError):
        Dfa(states=("s",), start="s", accepting=(), alphabet=("a",), transitions={})


@pytest.mark.parametrize("n", [0, 1, 3, 8])
def test_rfa_Ln_recognizes_with_certainty(n):
    a = rfa_Ln(n)
    assert a.is_reversible
    for word in words("ab", n + 2):
        result = run(a, word)
        expected = 1.0 if membership_Ln(n, word) else 0.0
        assert result.p_accept == pytest.approx(expected)
        assert result.p_accept + result.p_reject == pytest.approx(1.0)


def test_rfa_Ln_size_guard():
    with pytest.raises(InfeasibleParametersError):
        rfa_Ln(17)


def test_transcript_automaton_state_count():
    a = transcript_automaton(("a", "b"), 3, lambda w: w.endswith("a"))
    assert len(a.states) == 2 * (2 ** 4 - 1) + 2 ** 3


def test_dfa_embedding_runs_like_the_dfa():
    dfa = dfa_Ln(2)
    a = dfa_as_qfa(dfa, 4)
    assert run(a, "ba").p_accept == pytest.approx(1.0)
    for word in words("ab", 4):
        assert run(a, word).p_accept == pytest.approx(float(dfa.accepts(word)))
    # longer than the horizon
    assert run(a, "bbbba").p_accept == pytest.approx(0.0)


def test_size_report():
    assert qfa_size_report(dfa_Ln(5)) == (13, 4)
    states, qubits = qfa_size_report(rfa_Ln(2))
    assert states == 2 * (2 ** 5 - 1) + 2 ** 4
    assert qubits == 7


def test_run_profile_and_errors(toy_qfa):
    result = run(toy_qfa, "abab")
    assert len(result.halting_profile) == 6
    assert all(b >= a - 1e-12 for a, b in zip(result.halting_profile, result.halting_profile[1:]))
    assert result.p_accept + result.p_reject == pytest.approx(result.halting_profile[-1])
    with pytest.raises(ValueError):
        run(toy_qfa, "abc")


def test_toy_qfa_halts_in_the_middle(toy_qfa):
    _, halted = prefix_state(toy_qfa, "ab")
    assert halted > 0.01
    assert halted_before(toy_qfa, 2) > 0.01
    assert halted_before(toy_qfa, 0) == pytest.approx(0.0)


def test_qfa_validation():
    identity = UnitaryOp.identity(2)
    with pytest.raises(ValueError):
        Qfa(states=("s", "t"), accepting={"s"}, rejecting=set(), start="s",
            alphabet=("a",), unitaries={"^": identity, "a": identity, "$": identity})
    with pytest.raises(ValueError):
        Qfa(states=("s", "t"), accepting={"t"}, rejecting=set(), start="s",
            alphabet=("a",), unitaries={"^": identity, "a": identity})


@pytest.mark.parametrize("r", [0, 1, 2, 3])
def test_restrict_preserves_acceptance(toy_qfa, r):
    b = restrict(toy_qfa, r)
    assert len(b.states) == 4 + 2 * (r + 2) * 2
    assert halted_before(b, r) == pytest.approx(0.0, abs=1e-12)
    for word in words("ab", 4):
        assert run(b, word).p_accept == pytest.approx(run(toy_qfa, word).p_accept, abs=1e-9)
        assert run(b, word).p_reject == pytest.approx(run(toy_qfa, word).p_reject, abs=1e-9)


def test_restrict_zero_of_a_reversible_automaton():
    a = rfa_Ln(1)
    b = restrict(a, 0)
    for word in words("ab", 3):
        assert run(b, word).p_accept == pytest.approx(run(a, word).p_accept)


@pytest.mark.parametrize("r", [0, 1])
def test_restricted_dfa_embedding_keeps_the_language(r):
    dfa = dfa_Ln(2)
    b = restrict(dfa_as_qfa(dfa, 4), r)
    assert run(b, "bba").p_accept == pytest.approx(1.0)
    for word in words("ab", 4):
        assert run(b, word).p_accept == pytest.approx(float(dfa.accepts(word)))


def test_restrict_rejects_negative_r(toy_qfa):
    with pytest.raises(InfeasibleParametersError):
        restrict(toy_qfa, -1)


@pytest.mark.parametrize("n", [1, 2, 3, 5, 8])
def test_serial_encoding_from_rfa_is_perfect(n):
    scheme = serial_from_qfa(rfa_Ln(n), n)
    assert scheme.m == n
    p, _ = success_probability(scheme)
    assert p == pytest.approx(1.0)


def test_serial_encoding_from_noisy_automaton():
    theta = 0.4
    a = with_decision_noise(rfa_Ln(3), theta)
    for word in words("ab", 4):
        expected = np.cos(theta) ** 2 if membership_Ln(3, word) else np.sin(theta) ** 2
        assert run(a, word).p_accept == pytest.approx(expected)
    p, table = success_probability(serial_from_qfa(a, 3))
    assert p == pytest.approx(np.cos(theta) ** 2)
    assert table.maximum == pytest.approx(np.cos(theta) ** 2)


def test_decision_noise_touches_only_the_right_end_marker():
    theta = 0.25
    base = rfa_Ln(4)
    a = with_decision_noise(base, theta)
    halting = len(base.accepting) + len(base.rejecting)
    assert a.dimension == base.dimension + halting
    for letter in ("^", "a", "b"):
        assert a.unitary(letter).is_permutation
    dollar = a.unitary("$")
    assert dollar.is_sparse
    # one rotation per halting state, every column keeps at most two entries
    assert np.diff(dollar.entries.tocsc().indptr).max() == 2
    for word in ("a", "bbba", "bbbba", "ab", "bbbbbba"):
        expected = np.cos(theta) ** 2 if membership_Ln(4, word) else np.sin(theta) ** 2
        assert run(a, word).p_accept == pytest.approx(expected)


def test_noisy_serial_encoding_stays_sparse():
    theta = 0.3
    scheme = serial_from_qfa(with_decision_noise(rfa_Ln(8), theta), 8)
    assert all(decoder.frame.is_sparse for decoder in scheme.decoders.values())
    p, _ = success_probability(scheme)
    assert p == pytest.approx(np.cos(theta) ** 2)


def test_serial_encoding_needs_a_restricted_automaton(toy_qfa):
    with pytest.raises(VerificationError):
        serial_from_qfa(toy_qfa, 2)
    scheme = serial_from_qfa(restrict(toy_qfa, 2), 2)
    _, table = success_probability(scheme)
    assert all(0.0 <= p <= 1.0 + 1e-9 for _, _, p in table.rows())


def test_serial_encoding_rejects_zero_bits():
    with pytest.raises(InfeasibleParametersError):
        serial_from_qfa(rfa_Ln(1), 0)
