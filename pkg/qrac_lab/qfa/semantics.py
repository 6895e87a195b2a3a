from math import ceil, log2
from typing import Tuple, Union

import numpy as np

from qrac_lab.constants import HaltingLabel, Symbols
from qrac_lab.model import Dfa, Qfa, RunResult


def _check_word(a: Qfa, word: str):
    for letter in word:
        if letter not in a.alphabet:
            raise ValueError(
                f"letter {letter!r} is not in the input alphabet {a.alphabet}"
            )


def _read(a: Qfa, psi: np.ndarray, symbol: str) -> Tuple[np.ndarray, float, float]:
    """Applies U_symbol and measures E_acc + E_rej + E_non. Returns the
    unnormalized non-halting part and the accepted and rejected mass."""
    measurement = a.halting_measurement
    psi = a.unitary(symbol).apply_to(psi)
    accepted = float(measurement.probability(HaltingLabel.ACCEPT, psi))
    rejected = float(measurement.probability(HaltingLabel.REJECT, psi))
    psi = psi.copy()
    psi[measurement.indices(HaltingLabel.ACCEPT)] = 0.0
    psi[measurement.indices(HaltingLabel.REJECT)] = 0.0
    return psi, accepted, rejected


def run(a: Qfa, word: str) -> RunResult:
    """Reads the left end marker, the word and the right end marker.

    The non-halting component is carried unnormalized, so its squared norm
    is the probability that no measurement so far has halted.
    """
    _check_word(a, word)
    psi = a.start_vector
    p_accept, p_reject = 0.0, 0.0
    profile = []
    for symbol in (Symbols.CENT, *word, Symbols.DOLLAR):
        psi, accepted, rejected = _read(a, psi, symbol)
        p_accept += accepted
        p_reject += rejected
        profile.append(p_accept + p_reject)
    return RunResult(p_accept, p_reject, tuple(profile))


def prefix_state(a: Qfa, word: str) -> Tuple[np.ndarray, float]:
    """Unnormalized non-halting state after reading the left end marker
    and word, and the probability of having halted on the way"""
    _check_word(a, word)
    psi = a.start_vector
    halted = 0.0
    for symbol in (Symbols.CENT, *word):
        psi, accepted, rejected = _read(a, psi, symbol)
        halted += accepted + rejected
    return psi, halted


def qfa_size_report(a: Union[Qfa, Dfa]) -> Tuple[int, int]:
    """(number of basis states, qubits needed to hold one)"""
    states = len(a.states)
    return states, ceil(log2(states)) if states > 1 else 0
