from typing import Dict, Tuple

import numpy as np

from qrac_lab.errors import InfeasibleParametersError
from qrac_lab.model import QuantumEncoding, SuccessTable
from qrac_lab.utils.bits import all_strings
from qrac_lab.utils.config import setting
from qrac_lab.utils.logging import get_logger
from qrac_lab.utils.parallel import sweep


def _string_success(s: QuantumEncoding, x: str) -> Dict[Tuple[str, int], float]:
    success = np.zeros(s.m)
    for r, weight in enumerate(s.weights):
        amplitudes = s.extended_codeword(x, r)
        for i in range(s.m):
            success[i] += weight * s.decoder_for(i, x).probability(int(x[i]), amplitudes)
    return {(x, i): float(success[i]) for i in range(s.m)}


def success_probability(
        s: QuantumEncoding,
        threads: int = None
    ) -> Tuple[float, SuccessTable]:
    """Exact success probability of every (x, i).

    :raises InfeasibleParametersError: m above guards.max_exact_bits, use
        monte_carlo_success instead
    :return: the minimum over all entries (the scheme's p) and the table
    """
    limit = setting("guards", "max_exact_bits", int)
    if s.m > limit:
        raise InfeasibleParametersError(
            f"exact evaluation of m={s.m} bits exceeds the limit of {limit}; "
            f"use monte_carlo_success"
        )
    get_logger(__name__).debug(f"evaluating {s.name or 'scheme'} with m={s.m}")
    results = sweep(lambda x: _string_success(s, x), all_strings(s.m), threads)
    probabilities = {}
    for entries in results.values():
        probabilities.update(entries)
    table = SuccessTable(s.m, probabilities)
    return table.minimum, table


def monte_carlo_success(
        s: QuantumEncoding,
        samples: int,
        seed: int
    ) -> float:
    """Estimates the success probability averaged over uniformly random
    (x, i) by sampling x, i, the randomness index and the measurement
    outcome."""
    rng = np.random.default_rng(seed)
    hits = 0
    for _ in range(samples):
        x = "".join(rng.choice(["0", "1"], size=s.m))
        i = int(rng.integers(s.m))
        r = int(rng.choice(len(s.weights), p=s.weights))
        p_right = s.decoder_for(i, x).probability(int(x[i]), s.extended_codeword(x, r))
        hits += int(rng.random() < p_right)
    return hits / samples
