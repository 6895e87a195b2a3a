from math import ceil
from typing import List, Sequence, Tuple

import numpy as np

from qrac_lab.errors import InfeasibleParametersError
from qrac_lab.model import BoundReport
from qrac_lab.model.bound_report import FEASIBLE, INFEASIBLE
from qrac_lab.qrac.combinators import required_copies
from qrac_lab.utils.logging import get_logger

FANO_NOTE = (
    "information step: Fano's inequality at error probability 1/2 over "
    "2^m strings, I >= m/2 - 1"
)
CONSTANT_P_NOTE = (
    "chain assumes a constant p > 1/2; other regimes are extrapolation"
)
SMALL_M_NOTE = "the chain is asymptotic and only bites for large m"
SERIAL_NOTE = (
    "serial encoding: decoder i may use the suffix x[i+1:], extraction "
    "runs from the last bit to the first with the same per-step condition"
)


def _check(m: int, p: float):
    if m < 1:
        raise InfeasibleParametersError(f"m must be >= 1, got {m}")
    if not 0.5 < p <= 1.0:
        raise InfeasibleParametersError(
            f"bound reports need 1/2 < p <= 1, got p={p}"
        )


def target_epsilon(m: int) -> float:
    return 1.0 / (64.0 * m * m)


def chain_values(m: int, p: float) -> Tuple[np.ndarray, np.ndarray]:
    """Copies t(m') and ceil((m'/2 - 1) / t(m')) clamped at 0, for
    m' = 1..m"""
    copies = np.array(
        [required_copies(p, target_epsilon(k)) for k in range(1, m + 1)],
        dtype=np.int64
    )
    information = np.arange(1, m + 1) / 2.0 - 1.0
    minimum = np.maximum(0, np.ceil(information / copies)).astype(np.int64)
    return copies, minimum


def _report(kind: str, m: int, n: int, p: float, extra_notes: Sequence[str]) -> BoundReport:
    _check(m, p)
    copies, minimum = chain_values(m, p)
    epsilon = target_epsilon(m)
    implied = int(minimum.max())
    notes = [FANO_NOTE, CONSTANT_P_NOTE, *extra_notes]
    if implied <= 1:
        notes.append(SMALL_M_NOTE)
    report = BoundReport(
        kind=kind,
        m=m,
        n=n,
        p=p,
        epsilon=epsilon,
        copies=int(copies[-1]),
        extraction_success=1.0 - 4.0 * m * np.sqrt(epsilon),
        information=m / 2.0 - 1.0,
        chain_min_n=int(minimum[-1]),
        implied_min_n=implied,
        status=INFEASIBLE if n < implied else FEASIBLE,
        notes=tuple(notes)
    )
    get_logger(__name__).info(
        f"{kind} bound m={m} n={n} p={p}: implied n >= {implied} ({report.status})"
    )
    return report


def quantum_bound_report(m: int, n: int, p: float) -> BoundReport:
    """Lower bound on the qubits of an (m, n, p) quantum random access code.

    Amplify to per-bit error 1/(64 m^2) with t copies, extract all bits
    with success >= 1/2, so the t n qubits carry at least m/2 - 1 bits.
    A code for m bits also serves m' <= m bits, so the reported bound is
    the largest value of the chain over all m' <= m.
    """
    return _report("quantum", m, n, p, ())


def serial_bound_report(m: int, n: int, p: float) -> BoundReport:
    return _report("serial", m, n, p, (SERIAL_NOTE,))


def bound_sweep(ms: Sequence[int], p: float) -> Tuple[List[str], List[list]]:
    """CSV header and rows m, epsilon, copies, chain_min_n, implied_min_n"""
    ms = sorted(set(int(m) for m in ms))
    if not ms:
        return [], []
    _check(ms[0], p)
    copies, minimum = chain_values(ms[-1], p)
    implied = np.maximum.accumulate(minimum)
    header = ["m", "epsilon", "copies", "chain_min_n", "implied_min_n"]
    rows = [
        [m, target_epsilon(m), int(copies[m - 1]), int(minimum[m - 1]), int(implied[m - 1])]
        for m in ms
    ]
    return header, rows
