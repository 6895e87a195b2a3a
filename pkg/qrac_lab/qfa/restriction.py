from typing import Dict, List

import numpy as np
from scipy import sparse

from qrac_lab.constants import Symbols
from qrac_lab.errors import InfeasibleParametersError
from qrac_lab.linalg import complete_isometry
from qrac_lab.model import Qfa, UnitaryOp
from qrac_lab.utils.logging import get_logger

ACC = "acc"
REJ = "rej"
NON = "non"


def _tag(state: str, counter: int, kind: str) -> str:
    return f"{state}|{counter}|{kind}"


def _unit(dimension: int, index: int) -> np.ndarray:
    vector = np.zeros(dimension, dtype=complex)
    vector[index] = 1.0
    return vector


def restrict(a: Qfa, r: int) -> Qfa:
    """Equivalent automaton that never halts before reading r letters.

    Amplitude that would halt in q is parked in the non-halting copy
    (q, 0, non). Every further letter increments the counter; after r + 1
    letters or at the right end marker it moves to the halting copy
    (q, i, acc) or (q, i, rej). Transitions the construction leaves open
    are completed to a unitary by Gram-Schmidt. The result has
    |Q| + 2 (r + 2) (|Q_acc| + |Q_rej|) states.
    """
    if r < 0:
        raise InfeasibleParametersError(f"r must be >= 0, got {r}")

    halting_kind = {q: ACC for q in a.accepting}
    halting_kind.update({q: REJ for q in a.rejecting})
    halting = [q for q in a.states if q in halting_kind]

    states: List[str] = list(a.states)
    for q in halting:
        for counter in range(r + 2):
            states.append(_tag(q, counter, halting_kind[q]))
            states.append(_tag(q, counter, NON))
    index = {state: k for k, state in enumerate(states)}
    dimension = len(states)

    # where amplitude landing on an original state goes on a symbol other
    # than the right end marker
    relabel = np.array(
        [
            index[_tag(q, 0, NON)] if q in halting_kind else index[q]
            for q in a.states
        ],
        dtype=np.int64
    )

    unitaries: Dict[str, UnitaryOp] = {}
    for symbol in (Symbols.CENT, *a.alphabet, Symbols.DOLLAR):
        matrix = a.unitary(symbol).matrix
        images = {}
        for column, q in enumerate(a.states):
            image = np.zeros(dimension, dtype=complex)
            if symbol == Symbols.DOLLAR:
                image[:a.dimension] = matrix[:, column]
            else:
                image[relabel] = matrix[:, column]
            images[column] = image

        for q in halting:
            kind = halting_kind[q]
            for counter in range(r + 2):
                source = index[_tag(q, counter, NON)]
                if symbol == Symbols.DOLLAR and counter <= r:
                    images[source] = _unit(dimension, index[_tag(q, counter, kind)])
                elif symbol in a.alphabet and counter < r:
                    images[source] = _unit(dimension, index[_tag(q, counter + 1, NON)])
                elif symbol in a.alphabet and counter == r:
                    images[source] = _unit(dimension, index[_tag(q, counter + 1, kind)])
        unitaries[symbol] = complete_isometry(images, dimension)

    accepting = set(a.accepting)
    rejecting = set(a.rejecting)
    for q in halting:
        for counter in range(r + 2):
            if halting_kind[q] == ACC:
                accepting.add(_tag(q, counter, ACC))
            else:
                rejecting.add(_tag(q, counter, REJ))

    get_logger(__name__).info(
        f"restricted {a.name or 'automaton'} with r={r}: {a.dimension} -> {dimension} states"
    )
    return Qfa(
        states=tuple(states),
        accepting=frozenset(accepting),
        rejecting=frozenset(rejecting),
        start=a.start,
        alphabet=a.alphabet,
        unitaries=unitaries,
        name=f"restrict({a.name or 'qfa'}, {r})"
    )


def with_decision_noise(a: Qfa, theta: float) -> Qfa:
    """Blurs the final decision: every halting state q gets a fresh partner
    of the opposite kind, and after the right end marker amplitude on q is
    rotated by theta into the partner. A recognizer with probability 1
    becomes one with probability cos^2(theta)."""
    partners = []
    for q in a.states:
        if q in a.accepting:
            partners.append((q, f"{q}~{REJ}", REJ))
        elif q in a.rejecting:
            partners.append((q, f"{q}~{ACC}", ACC))
    states = list(a.states) + [partner for _, partner, _ in partners]
    dimension = len(states)
    index = {state: k for k, state in enumerate(states)}

    unitaries = {
        symbol: unitary.padded(dimension)
        for symbol, unitary in a.unitaries.items()
    }
    # rotate U_$ pairwise after the fact, a halting state with its partner
    halting = np.array([index[q] for q, _, _ in partners], dtype=np.int64)
    partnered = np.array([index[p] for _, p, _ in partners], dtype=np.int64)
    untouched = np.setdiff1d(np.arange(dimension), np.concatenate([halting, partnered]))
    cos, sin = np.cos(theta), np.sin(theta)
    rows = np.concatenate([untouched, halting, halting, partnered, partnered])
    columns = np.concatenate([untouched, halting, partnered, halting, partnered])
    values = np.concatenate([
        np.ones(untouched.size),
        np.full(halting.size, cos), np.full(halting.size, -sin),
        np.full(halting.size, sin), np.full(halting.size, cos),
    ])
    rotation = UnitaryOp.from_matrix(
        sparse.csr_matrix((values, (rows, columns)), shape=(dimension, dimension))
    )
    unitaries[Symbols.DOLLAR] = rotation.compose(unitaries[Symbols.DOLLAR])
    return Qfa(
        states=tuple(states),
        accepting=frozenset(a.accepting) | {p for _, p, kind in partners if kind == ACC},
        rejecting=frozenset(a.rejecting) | {p for _, p, kind in partners if kind == REJ},
        start=a.start,
        alphabet=a.alphabet,
        unitaries=unitaries,
        name=f"noisy({a.name or 'qfa'}, {theta:g})"
    )
