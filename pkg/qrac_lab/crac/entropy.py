import numpy as np
from scipy.special import entr

from qrac_lab.errors import InfeasibleParametersError
from qrac_lab.utils.logging import get_logger


def binary_entropy(p: float) -> float:
    """H(p) in bits, H(0) = H(1) = 0"""
    if not 0.0 <= p <= 1.0:
        raise InfeasibleParametersError(f"binary entropy needs p in [0, 1], got {p}")
    return float((entr(p) + entr(1.0 - p)) / np.log(2))


def classical_lower_bound(m: int, p: float) -> float:
    """(1 - H(p)) m, the least number of bits of a classical (m, n, p)
    code. Vacuous for p <= 1/2, where 0 is returned."""
    if p > 1.0:
        raise InfeasibleParametersError(f"success probability {p} exceeds 1")
    if p <= 0.5:
        get_logger(__name__).warning(
            f"lower bound is vacuous for p={p} <= 1/2, returning 0"
        )
        return 0.0
    return (1.0 - binary_entropy(p)) * m
