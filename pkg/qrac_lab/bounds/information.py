from typing import List, Tuple, Union

import numpy as np
from scipy.special import entr

from qrac_lab.errors import InfeasibleParametersError
from qrac_lab.linalg import von_neumann_entropy
from qrac_lab.model import ClassicalRacScheme, DensityMatrix, Ensemble, QuantumEncoding
from qrac_lab.utils.bits import all_strings
from qrac_lab.utils.config import setting


def holevo_chi(e: Ensemble) -> float:
    """S(sum p_x rho_x) - sum p_x S(rho_x) in bits"""
    return von_neumann_entropy(e.average()) - sum(
        p * von_neumann_entropy(rho) for p, rho in e.members
    )


def scheme_ensemble(s: QuantumEncoding) -> Ensemble:
    """Codewords of a uniformly random x, each mixed over the randomness"""
    strings = all_strings(s.m)
    return Ensemble(
        tuple(
            (1.0 / len(strings), DensityMatrix.mixture(s.weights, s.codewords[x]))
            for x in strings
        )
    )


def _entropy(distribution: np.ndarray) -> float:
    return float(np.sum(entr(distribution)) / np.log(2))


def _quantum_outcomes(s: QuantumEncoding, i: int) -> List[dict]:
    outcomes = []
    for x in all_strings(s.m):
        decoder = s.decoder_for(i, x)
        distribution = dict.fromkeys(decoder.labels, 0.0)
        for r, weight in enumerate(s.weights):
            for label, p in decoder.probabilities(s.extended_codeword(x, r)).items():
                distribution[label] += weight * p
        outcomes.append(distribution)
    return outcomes


def _classical_outcomes(s: ClassicalRacScheme, i: int) -> List[dict]:
    weights = np.outer(s.weights, s.decoder_weights)
    outcomes = []
    for k in range(2 ** s.m):
        answers = s.decoder_array[i][s.encoding_array[k]]
        p_one = float(np.sum(weights * answers))
        outcomes.append({0: 1.0 - p_one, 1: p_one})
    return outcomes


def _bit_information(outcomes: List[dict], m: int, i: int) -> float:
    """I(X_i : Z_i) for uniform x from the outcome distribution per x"""
    labels = sorted({label for distribution in outcomes for label in distribution}, key=str)
    joint = np.zeros((2, len(labels)))
    for x, distribution in zip(all_strings(m), outcomes):
        for column, label in enumerate(labels):
            joint[int(x[i]), column] += distribution.get(label, 0.0) / len(outcomes)
    return max(
        0.0,
        _entropy(joint.sum(axis=1)) + _entropy(joint.sum(axis=0)) - _entropy(joint.reshape(-1))
    )


def bit_informations(s: Union[QuantumEncoding, ClassicalRacScheme]) -> List[float]:
    """I(X_i : Z_i) of every bit for a uniform x, Z_i being the outcome of
    decoder i"""
    limit = setting("guards", "max_classical_bits", int)
    if s.m > limit:
        raise InfeasibleParametersError(
            f"mutual information is computed for m <= {limit}, got m={s.m}"
        )
    if isinstance(s, ClassicalRacScheme):
        outcomes = _classical_outcomes
    else:
        outcomes = _quantum_outcomes
    return [_bit_information(outcomes(s, i), s.m, i) for i in range(s.m)]


def decoding_mutual_information(
        s: Union[QuantumEncoding, ClassicalRacScheme],
        i: int
    ) -> Tuple[float, float]:
    """Mutual information between bit i of a uniform x and the outcome of
    decoder i, together with the sum over all bits"""
    if not 0 <= i < s.m:
        raise ValueError(f"bit index {i} outside 0..{s.m - 1}")
    informations = bit_informations(s)
    return informations[i], float(sum(informations))
