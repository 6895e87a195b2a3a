from itertools import product
from math import ceil, log
from typing import List, Tuple

import numpy as np
from scipy.stats import binom

from qrac_lab.errors import InfeasibleParametersError
from qrac_lab.linalg import kron_all, tensor_all
from qrac_lab.model import (
    ProjectiveMeasurement,
    QracScheme,
    StateVector,
    UnitaryOp,
    subsystem_permutation,
)
from qrac_lab.utils.bits import all_strings
from qrac_lab.utils.config import setting
from qrac_lab.utils.logging import get_logger


def _check_register_size(qubits: int, what: str):
    limit = setting("guards", "max_extraction_qubits", int)
    if qubits > limit:
        raise InfeasibleParametersError(
            f"{what} needs {qubits} qubits, more than the limit of {limit} "
            f"(guards.max_extraction_qubits)"
        )


def _product_randomness(
        weights: Tuple[float, ...],
        copies: int
    ) -> Tuple[List[Tuple[int, ...]], Tuple[float, ...]]:
    indices = list(product(range(len(weights)), repeat=copies))
    return indices, tuple(
        float(np.prod([weights[r] for r in combo])) for combo in indices
    )


def _interleave_order(copies: int) -> List[int]:
    """Moves the copies' ancilla registers behind all codeword registers:
    [C0 A0 C1 A1 ...] -> [C0 C1 ... A0 A1 ...]"""
    return [2 * c for c in range(copies)] + [2 * c + 1 for c in range(copies)]


def _regroup(
        measurement: ProjectiveMeasurement,
        s: QracScheme,
        copies: int
    ) -> ProjectiveMeasurement:
    """Re-expresses a measurement on interleaved copies of (codeword,
    ancilla) in the layout codewords first, ancillas last."""
    if s.ancilla == 0:
        return measurement
    dims = [2 ** s.n, 2 ** s.ancilla] * copies
    shuffle = subsystem_permutation(dims, _interleave_order(copies))
    return measurement.after(shuffle.inverse)


def tensor_power(s: QracScheme, k: int) -> QracScheme:
    """k independent blocks of s side by side: a (k m, k n) code whose bit
    j is decoded by the block decoder of block j // m."""
    if k < 1:
        raise InfeasibleParametersError(f"tensor power needs k >= 1, got {k}")
    if k == 1:
        return s
    _check_register_size(k * (s.n + s.ancilla), f"tensor power k={k}")

    indices, weights = _product_randomness(s.weights, k)
    codewords = {}
    for x in all_strings(k * s.m):
        blocks = [x[b * s.m:(b + 1) * s.m] for b in range(k)]
        codewords[x] = tuple(
            tensor_all([s.codeword(block, r) for block, r in zip(blocks, combo)])
            for combo in indices
        )

    block_dimension = s.decoding_dimension
    identity = UnitaryOp.identity(block_dimension)
    decoders = []
    for b in range(k):
        for decoder in s.decoders:
            frame = kron_all(
                [decoder.frame if c == b else identity for c in range(k)]
            )
            one = np.zeros(block_dimension, dtype=np.int64)
            one[decoder.indices(1)] = 1
            lifted = np.kron(
                np.ones(block_dimension ** b, dtype=np.int64),
                np.kron(one, np.ones(block_dimension ** (k - b - 1), dtype=np.int64))
            )
            measurement = ProjectiveMeasurement(
                frame,
                ((0, tuple(np.flatnonzero(lifted == 0))), (1, tuple(np.flatnonzero(lifted == 1))))
            )
            decoders.append(_regroup(measurement, s, k))

    get_logger(__name__).info(f"tensor power {k} of {s.name or 'scheme'}")
    return QracScheme(
        m=k * s.m,
        n=k * s.n,
        weights=weights,
        codewords=codewords,
        decoders=tuple(decoders),
        ancilla=k * s.ancilla,
        name=f"{s.name}^{k}"
    )


def amplify(s: QracScheme, t: int) -> QracScheme:
    """t copies of every codeword, each bit decoded by the majority of the
    t per-copy answers (one projective measurement on the t-fold space)."""
    if t < 1 or t % 2 == 0:
        raise InfeasibleParametersError(
            f"majority amplification needs an odd number of copies, got {t}"
        )
    if t == 1:
        return s
    _check_register_size(t * (s.n + s.ancilla), f"amplification t={t}")

    indices, weights = _product_randomness(s.weights, t)
    codewords = {
        x: tuple(
            tensor_all([s.codeword(x, r) for r in combo]) for combo in indices
        )
        for x in all_strings(s.m)
    }

    decoders = []
    for decoder in s.decoders:
        one = np.zeros(s.decoding_dimension, dtype=np.int64)
        one[decoder.indices(1)] = 1
        votes = one
        for _ in range(t - 1):
            votes = np.add.outer(votes, one).reshape(-1)
        majority = votes > t // 2
        measurement = ProjectiveMeasurement(
            kron_all([decoder.frame] * t),
            ((0, tuple(np.flatnonzero(~majority))), (1, tuple(np.flatnonzero(majority))))
        )
        decoders.append(_regroup(measurement, s, t))

    get_logger(__name__).info(f"majority amplification t={t} of {s.name or 'scheme'}")
    return QracScheme(
        m=s.m,
        n=t * s.n,
        weights=weights,
        codewords=codewords,
        decoders=tuple(decoders),
        ancilla=t * s.ancilla,
        name=f"maj{t}({s.name})"
    )


def binomial_majority_success(p: float, t: int) -> float:
    """Probability that the majority of t independent answers, each right
    with probability p, is right"""
    if t < 1 or t % 2 == 0:
        raise InfeasibleParametersError(f"t must be odd and positive, got {t}")
    return float(binom.sf((t - 1) // 2, t, p))


def required_copies(p: float, epsilon: float, exact: bool = False) -> int:
    """Smallest odd t whose majority error is at most epsilon.

    By default the Hoeffding estimate exp(-2 t (p - 1/2)^2) <= epsilon is
    used, an upper bound on the true minimum. With exact=True the binomial
    tail itself is searched.
    """
    if not 0.5 < p <= 1.0:
        raise InfeasibleParametersError(
            f"amplification needs 1/2 < p <= 1, got p={p}"
        )
    if not 0.0 < epsilon < 1.0:
        raise InfeasibleParametersError(f"epsilon must be in (0, 1), got {epsilon}")
    if epsilon >= 1.0 - p:
        return 1

    hoeffding = ceil(log(1.0 / epsilon) / (2.0 * (p - 0.5) ** 2))
    if hoeffding % 2 == 0:
        hoeffding += 1
    if not exact:
        return hoeffding

    for t in range(1, hoeffding + 1, 2):
        if binom.sf((t - 1) // 2, t, 1.0 - p) <= epsilon:
            return t
    return hoeffding
