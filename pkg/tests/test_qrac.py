import numpy as np
import pytest

from qrac_lab.errors import InfeasibleParametersError
from qrac_lab.qrac import (
    amplify,
    binomial_majority_success,
    computational_scheme,
    monte_carlo_success,
    qrac_2to1,
    qrac_3to1,
    required_copies,
    step_perturbation,
    success_probability,
    tensor_power,
)

COS2_PI_8 = np.cos(np.pi / 8) ** 2
THREE_TO_ONE = (1 + 1 / np.sqrt(3)) / 2
# per-bit error of the 2 -> 1 code after a 5-fold majority vote
MAJORITY_5_ERROR = 0.0249126


def test_2to1_success_is_cos_squared_pi_over_8():
    p, table = success_probability(qrac_2to1())
    assert len(table.rows()) == 8
    assert p == pytest.approx(0.8535534, abs=1e-7)
    for _, _, probability in table.rows():
        assert probability == pytest.approx(COS2_PI_8, abs=1e-9)


def test_3to1_success_and_complex_codewords():
    scheme = qrac_3to1()
    p, table = success_probability(scheme)
    assert len(table.rows()) == 24
    assert p == pytest.approx(0.7886751, abs=1e-7)
    for _, _, probability in table.rows():
        assert probability == pytest.approx(THREE_TO_ONE, abs=1e-9)
    assert any(
        np.abs(state.amplitudes.imag).max() > 1e-6
        for states in scheme.codewords.values() for state in states
    )


def test_computational_scheme_is_perfect():
    p, _ = success_probability(computational_scheme(3))
    assert p == pytest.approx(1.0)


def test_tensor_power_keeps_per_bit_success():
    scheme = tensor_power(qrac_2to1(), 2)
    assert (scheme.m, scheme.n) == (4, 2)
    p, table = success_probability(scheme)
    assert table.maximum == pytest.approx(COS2_PI_8, abs=1e-9)
    assert p == pytest.approx(COS2_PI_8, abs=1e-9)


def test_tensor_power_one_is_identity_and_zero_is_rejected():
    base = qrac_2to1()
    assert tensor_power(base, 1) is base
    with pytest.raises(InfeasibleParametersError):
        tensor_power(base, 0)


def test_amplify_one_is_identity():
    base = qrac_2to1()
    assert amplify(base, 1) is base


def test_amplify_rejects_even_copies():
    with pytest.raises(InfeasibleParametersError):
        amplify(qrac_2to1(), 4)


@pytest.mark.parametrize("t", [3, 5, 7])
def test_amplified_error_matches_binomial_majority(t):
    p, table = success_probability(amplify(qrac_2to1(), t))
    expected = binomial_majority_success(COS2_PI_8, t)
    assert p == pytest.approx(expected, abs=1e-9)
    assert table.maximum == pytest.approx(expected, abs=1e-9)


def test_five_copies_error():
    _, table = success_probability(amplify(qrac_2to1(), 5))
    assert table.error == pytest.approx(MAJORITY_5_ERROR, abs=1e-7)


def test_binomial_majority_success():
    assert binomial_majority_success(0.7, 1) == pytest.approx(0.7)
    assert binomial_majority_success(0.7, 3) == pytest.approx(0.7 ** 3 + 3 * 0.7 ** 2 * 0.3)
    with pytest.raises(InfeasibleParametersError):
        binomial_majority_success(0.7, 2)


def test_required_copies():
    assert required_copies(0.85, 1 / 640000) == 55
    assert required_copies(0.85, 0.2) == 1
    assert required_copies(1.0, 1e-6) == 1
    exact = required_copies(0.85, 1e-3, exact=True)
    assert exact % 2 == 1
    assert exact <= required_copies(0.85, 1e-3)
    assert 1 - binomial_majority_success(0.85, exact) <= 1e-3


@pytest.mark.parametrize("p, epsilon", [(0.5, 0.1), (0.4, 0.1), (0.8, 0.0), (0.8, 1.0)])
def test_required_copies_rejects_vacuous_parameters(p, epsilon):
    with pytest.raises(InfeasibleParametersError):
        required_copies(p, epsilon)


def test_exact_evaluation_guard(monkeypatch):
    monkeypatch.setattr("qrac_lab.qrac.evaluation.setting", lambda *args, **kwargs: 2)
    with pytest.raises(InfeasibleParametersError):
        success_probability(qrac_3to1())


def test_monte_carlo_is_reproducible_and_close():
    scheme = qrac_2to1()
    first = monte_carlo_success(scheme, 4000, seed=7)
    assert first == monte_carlo_success(scheme, 4000, seed=7)
    assert first == pytest.approx(COS2_PI_8, abs=0.03)


def test_nine_copies_follow_the_binomial_majority():
    _, table = success_probability(amplify(qrac_2to1(), 9))
    expected = binomial_majority_success(COS2_PI_8, 9)
    assert table.per_bit("01") == pytest.approx([expected, expected], abs=1e-9)


def test_tensor_square_of_3to1():
    scheme = tensor_power(qrac_3to1(), 2)
    assert (scheme.m, scheme.n) == (6, 2)
    p, _ = success_probability(scheme)
    assert p == pytest.approx(THREE_TO_ONE, abs=1e-9)


@pytest.mark.parametrize("answer", ["00", "01", "10", "11"])
@pytest.mark.parametrize("i", [0, 1])
def test_step_perturbation_for_any_answer_register(answer, i):
    # a wrong outcome leaves its amplitude behind and moves it to the
    # other column, costing twice its probability
    expected = 2 * (1 - COS2_PI_8)
    assert step_perturbation(qrac_2to1(), "01", i, answer) == pytest.approx(expected, abs=1e-9)
    assert step_perturbation(computational_scheme(2), "01", i, answer) == pytest.approx(0.0, abs=1e-12)
