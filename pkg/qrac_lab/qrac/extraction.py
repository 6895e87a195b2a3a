"""Deferred-measurement extraction of all m bits.

Decoder i is replaced by the unitary U_i that flips answer qubit i on the
outcome-1 subspace of the decoder,

    U_i |phi>|a> = (1 - P_1)|phi>|a> + P_1|phi>|a xor e_i>,

and the answer register is measured once at the end. The simulated state
is a (D, 2^m) matrix whose column a holds the codeword-and-ancilla part
entangled with answer content a. Answer bit i is index bit m-1-i.
"""
from typing import Dict, List, Optional, Sequence

import numpy as np

from qrac_lab.errors import InfeasibleParametersError
from qrac_lab.model import (
    ExtractionReport,
    OutcomeDistribution,
    QracScheme,
    QuantumEncoding,
    SerialScheme,
)
from qrac_lab.qrac.combinators import amplify, tensor_power
from qrac_lab.qrac.constructions import qrac_2to1
from qrac_lab.qrac.evaluation import success_probability
from qrac_lab.utils.bits import all_strings, to_int, to_string
from qrac_lab.utils.config import setting, tolerance
from qrac_lab.utils.logging import get_logger
from qrac_lab.utils.parallel import sweep

# Probabilities below this are dropped from extraction distributions
NEGLIGIBLE = 1e-15


def _check_size(s: QuantumEncoding):
    qubits = s.n + s.ancilla + s.m
    limit = setting("guards", "max_extraction_qubits", int)
    if qubits > limit:
        raise InfeasibleParametersError(
            f"extraction needs {qubits} qubits (n + l + m), more than the "
            f"limit of {limit}"
        )


def extraction_order(s: QuantumEncoding, order: Optional[Sequence[int]] = None) -> List[int]:
    """Bit order of the flips. Serial schemes must run from the last bit to
    the first so that the answer register holds the suffix each decoder
    depends on."""
    descending = list(range(s.m - 1, -1, -1))
    if isinstance(s, SerialScheme):
        if order is not None and list(order) != descending:
            raise InfeasibleParametersError(
                "serial schemes are extracted from the last bit to the first"
            )
        return descending
    if order is None:
        return list(range(s.m))
    order = list(order)
    if sorted(order) != list(range(s.m)):
        raise InfeasibleParametersError(f"{order} is not an ordering of the {s.m} bits")
    return order


def _decoder_groups(s: QuantumEncoding, i: int) -> Dict[str, np.ndarray]:
    """Answer-register columns grouped by the decoder that controls bit i"""
    columns = np.arange(2 ** s.m)
    if isinstance(s, QracScheme):
        return {"": columns}
    suffix_bits = s.m - 1 - i
    suffix_values = columns & ((1 << suffix_bits) - 1)
    return {
        to_string(value, suffix_bits): columns[suffix_values == value]
        for value in range(2 ** suffix_bits)
    }


def _controlled_flip(s: QuantumEncoding, psi: np.ndarray, i: int) -> np.ndarray:
    mask = 1 << (s.m - 1 - i)
    flipped = np.arange(2 ** s.m) ^ mask
    result = psi.copy()
    for suffix, columns in _decoder_groups(s, i).items():
        if isinstance(s, QracScheme):
            decoder = s.decoders[i]
        else:
            decoder = s.decoders[(i, suffix)]
        stay = psi[:, columns]
        move = psi[:, flipped[columns]]
        result[:, columns] = stay - decoder.project(1, stay) + decoder.project(1, move)
    return result


def _register(s: QuantumEncoding, x: str, r: int, answer: str = None) -> np.ndarray:
    psi = np.zeros((s.decoding_dimension, 2 ** s.m), dtype=complex)
    psi[:, to_int(answer) if answer else 0] = s.extended_codeword(x, r)
    return psi


def _check_string(s: QuantumEncoding, x: str):
    if len(x) != s.m or set(x) - {"0", "1"}:
        raise ValueError(f"{x!r} is not a {s.m}-bit string")


def sequential_extract(
        s: QuantumEncoding,
        x: str,
        epsilon: float = None,
        order: Optional[Sequence[int]] = None
    ) -> OutcomeDistribution:
    """Exact distribution of the answer register after all flips.

    :param epsilon: if given, the scheme's per-bit error is checked to be
        at most epsilon first
    :param order: bit order for random access schemes, 0..m-1 by default
    """
    _check_string(s, x)
    _check_size(s)
    order = extraction_order(s, order)
    if epsilon is not None:
        p, _ = success_probability(s)
        if 1.0 - p > epsilon + tolerance():
            raise InfeasibleParametersError(
                f"per-bit error {1.0 - p:.7f} exceeds epsilon={epsilon}"
            )

    weights = np.zeros(2 ** s.m)
    for r, weight in enumerate(s.weights):
        psi = _register(s, x, r)
        for i in order:
            psi = _controlled_flip(s, psi, i)
        weights += weight * np.sum(np.abs(psi) ** 2, axis=0)

    return OutcomeDistribution(
        {
            to_string(a, s.m): float(p)
            for a, p in enumerate(weights) if p > NEGLIGIBLE
        }
    )


def step_perturbation(s: QuantumEncoding, x: str, i: int, answer: str = None) -> float:
    """Squared distance between the real flip U_i and the ideal flip by x_i
    applied to |phi_x, 0, answer>, averaged over the randomness. The
    answer register defaults to the correct suffix of x and zeros
    elsewhere."""
    _check_string(s, x)
    if answer is None:
        answer = "0" * (i + 1) + x[i + 1:]
    total = 0.0
    for r, weight in enumerate(s.weights):
        real = _controlled_flip(s, _register(s, x, r, answer), i)
        target = answer[:i] + ("1" if answer[i] != x[i] else "0") + answer[i + 1:]
        ideal = _register(s, x, r, target)
        total += weight * float(np.sum(np.abs(real - ideal) ** 2))
    return total


def hybrid_distance(
        s: QuantumEncoding,
        x: str,
        order: Optional[Sequence[int]] = None
    ) -> float:
    """Distance between the state after all real flips and the ideal state
    |phi_x, 0, x>, averaged over the randomness"""
    _check_string(s, x)
    _check_size(s)
    order = extraction_order(s, order)
    total = 0.0
    for r, weight in enumerate(s.weights):
        psi = _register(s, x, r)
        for i in order:
            psi = _controlled_flip(s, psi, i)
        ideal = _register(s, x, r, x)
        total += weight * float(np.linalg.norm(psi - ideal))
    return total


def extraction_report(
        s: QuantumEncoding,
        x: str,
        order: Optional[Sequence[int]] = None,
        epsilon: float = None
    ) -> ExtractionReport:
    """Failure probability and hybrid distance next to the 4 m sqrt(eps)
    and 2 m sqrt(eps) bounds, eps being the scheme's per-bit error unless
    given"""
    if epsilon is None:
        p, _ = success_probability(s)
        epsilon = max(0.0, 1.0 - p)
    distribution = sequential_extract(s, x, order=order)
    report = ExtractionReport(
        m=s.m,
        x=x,
        epsilon=epsilon,
        distribution=distribution,
        failure=max(0.0, 1.0 - distribution.get(x)),
        failure_bound=4 * s.m * np.sqrt(epsilon),
        hybrid_distance=hybrid_distance(s, x, order),
        hybrid_bound=2 * s.m * np.sqrt(epsilon)
    )
    get_logger(__name__).info(
        f"extracted {x}: failure {report.failure:.3e} (bound {report.failure_bound:.3e})"
    )
    return report


def error_growth_sweep(
        blocks: Sequence[int] = (1, 2, 3),
        copies: int = 3,
        threads: int = None
    ):
    """Worst-case extraction failure of tensor_power(amplify(2to1, copies), k)
    over all strings, for every k in blocks, with a least-squares slope of
    failure against m."""
    base = amplify(qrac_2to1(), copies)

    def evaluate(k: int):
        scheme = tensor_power(base, k)
        p, _ = success_probability(scheme)
        epsilon = 1.0 - p
        failures = sweep(
            lambda x: 1.0 - sequential_extract(scheme, x).get(x),
            all_strings(scheme.m),
            1
        )
        return {
            "k": k,
            "m": scheme.m,
            "epsilon": epsilon,
            "failure": max(failures.values()),
            "bound": 4 * scheme.m * np.sqrt(epsilon)
        }

    rows = list(sweep(evaluate, blocks, threads).values())
    ms = np.array([row["m"] for row in rows], dtype=float)
    failures = np.array([row["failure"] for row in rows])
    slope = float(np.polyfit(ms, failures, 1)[0]) if len(rows) > 1 else 0.0
    return {"rows": rows, "slope": slope}
