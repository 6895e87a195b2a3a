from typing import Tuple

import numpy as np

from qrac_lab.errors import InfeasibleParametersError
from qrac_lab.model import ClassicalRacScheme, SuccessTable
from qrac_lab.utils.bits import all_strings, bit_matrix
from qrac_lab.utils.config import setting


def success_matrix(s: ClassicalRacScheme) -> np.ndarray:
    """(2^m, m) exact success probabilities, summed over both randomness
    registers"""
    limit = setting("guards", "max_classical_bits", int)
    if s.m > limit:
        raise InfeasibleParametersError(
            f"exact evaluation of classical schemes needs m <= {limit}, got m={s.m}"
        )
    strings = bit_matrix(s.m)
    encoder_weights = np.array(s.weights)
    decoder_weights = np.array(s.decoder_weights)
    codes = s.encoding_array
    success = np.zeros(strings.shape)
    for i in range(s.m):
        # decoded[x, r, r'] = answer for bit i
        decoded = s.decoder_array[i][codes]
        correct = decoded == strings[:, i][:, None, None]
        success[:, i] = np.einsum("xab,a,b->x", correct, encoder_weights, decoder_weights)
    return success


def exact_success(s: ClassicalRacScheme) -> Tuple[float, SuccessTable]:
    success = success_matrix(s)
    table = SuccessTable(
        s.m,
        {
            (x, i): float(success[k, i])
            for k, x in enumerate(all_strings(s.m)) for i in range(s.m)
        }
    )
    return table.minimum, table
