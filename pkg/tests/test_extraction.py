import numpy as np
import pytest

from qrac_lab.errors import InfeasibleParametersError
from qrac_lab.qfa import rfa_Ln, serial_from_qfa, with_decision_noise
from qrac_lab.qrac import (
    amplify,
    computational_scheme,
    error_growth_sweep,
    extraction_order,
    extraction_report,
    hybrid_distance,
    qrac_2to1,
    sequential_extract,
    step_perturbation,
    success_probability,
    tensor_power,
)
from qrac_lab.utils.bits import all_strings


@pytest.fixture(scope="module")
def amplified_blocks():
    base = amplify(qrac_2to1(), 3)
    return {k: tensor_power(base, k) for k in (1, 2, 3)}


def test_perfect_scheme_extracts_exactly():
    scheme = computational_scheme(3)
    distribution = sequential_extract(scheme, "101")
    assert distribution.get("101") == pytest.approx(1.0)
    assert hybrid_distance(scheme, "101") == pytest.approx(0.0, abs=1e-12)
    assert step_perturbation(scheme, "101", 1) == pytest.approx(0.0, abs=1e-12)


def test_extraction_distribution_of_2to1():
    distribution = sequential_extract(qrac_2to1(), "01")
    assert sum(distribution.to_dict().values()) == pytest.approx(1.0)
    assert set(distribution.labels) <= {"00", "01", "10", "11"}
    # bit 0 is right with cos^2(pi/8), the collapsed state then gives
    # a fair coin for bit 1
    assert distribution.get("01") == pytest.approx(np.cos(np.pi / 8) ** 2 / 2, abs=1e-9)


@pytest.mark.parametrize("k, strings", [
    (1, ["00", "01", "10", "11"]),
    (2, ["0000", "0110", "1011", "1111"]),
    (3, ["000000", "101101", "110010"]),
])
def test_extraction_stays_within_hybrid_bounds(amplified_blocks, k, strings):
    scheme = amplified_blocks[k]
    for x in strings:
        report = extraction_report(scheme, x)
        assert report.failure <= report.failure_bound + 1e-9
        assert report.hybrid_distance <= report.hybrid_bound + 1e-9
        assert report.within_bounds


def test_step_perturbation_is_bounded_by_error(amplified_blocks):
    scheme = amplified_blocks[2]
    p, _ = success_probability(scheme)
    epsilon = 1 - p
    for i in range(scheme.m):
        # the squared distance of one real flip to the ideal one is
        # 2 * (probability of the wrong outcome)
        assert step_perturbation(scheme, "0110", i) <= 2 * epsilon + 1e-9


def test_extraction_epsilon_check():
    with pytest.raises(InfeasibleParametersError):
        sequential_extract(qrac_2to1(), "00", epsilon=0.01)


def test_extraction_rejects_bad_orders_and_strings():
    with pytest.raises(InfeasibleParametersError):
        sequential_extract(qrac_2to1(), "00", order=[0, 0])
    with pytest.raises(ValueError):
        sequential_extract(qrac_2to1(), "012")


def test_error_grows_at_most_linearly():
    sweep = error_growth_sweep(blocks=(1, 2, 3), copies=3, threads=1)
    rows = sweep["rows"]
    assert [row["m"] for row in rows] == [2, 4, 6]
    for row in rows:
        assert row["failure"] <= row["bound"] + 1e-9
    epsilon = rows[0]["epsilon"]
    assert sweep["slope"] <= 4 * np.sqrt(epsilon) + 1e-9
    assert rows[0]["failure"] <= rows[1]["failure"] <= rows[2]["failure"]


@pytest.fixture(scope="module")
def serial_rfa3():
    return serial_from_qfa(rfa_Ln(3), 3)


def test_serial_scheme_extracts_every_string_exactly(serial_rfa3):
    for x in all_strings(3):
        report = extraction_report(serial_rfa3, x)
        assert report.epsilon == pytest.approx(0.0, abs=1e-12)
        assert report.distribution.get(x) == pytest.approx(1.0)
        assert report.failure == pytest.approx(0.0, abs=1e-9)
        assert report.hybrid_distance == pytest.approx(0.0, abs=1e-6)


@pytest.mark.parametrize("theta", [0.05, 0.2, 0.3])
def test_noisy_serial_extraction_within_bounds(theta):
    scheme = serial_from_qfa(with_decision_noise(rfa_Ln(3), theta), 3)
    p, _ = success_probability(scheme)
    assert p == pytest.approx(np.cos(theta) ** 2)
    epsilon = 1 - p
    for x in all_strings(3):
        report = extraction_report(scheme, x)
        assert report.failure <= 4 * scheme.m * np.sqrt(epsilon) + 1e-9
        assert report.hybrid_distance <= 2 * scheme.m * np.sqrt(epsilon) + 1e-9
        assert report.failure > 0


def test_serial_extraction_runs_from_the_last_bit(serial_rfa3):
    assert extraction_order(serial_rfa3) == [2, 1, 0]
    with pytest.raises(InfeasibleParametersError):
        sequential_extract(serial_rfa3, "101", order=[0, 1, 2])
