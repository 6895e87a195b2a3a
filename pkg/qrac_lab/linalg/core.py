from functools import reduce
from typing import Dict, Hashable, Mapping, Sequence, Tuple

import numpy as np
from scipy.special import entr
from scipy.stats import unitary_group

from qrac_lab.model import (
    DensityMatrix,
    OutcomeDistribution,
    ProjectiveMeasurement,
    StateVector,
    UnitaryOp,
)
from qrac_lab.utils.config import tolerance

# Residual norm below which a Gram-Schmidt candidate counts as dependent
COMPLETION_THRESHOLD = 1e-7


def tensor(a: StateVector, b: StateVector) -> StateVector:
    """a (x) b with a on the more significant index"""
    return StateVector(np.kron(a.amplitudes, b.amplitudes))


def tensor_all(states: Sequence[StateVector]) -> StateVector:
    return StateVector(reduce(np.kron, (state.amplitudes for state in states)))


def kron_all(operators: Sequence[UnitaryOp]) -> UnitaryOp:
    return reduce(lambda left, right: left.kron(right), operators)


def apply(u: UnitaryOp, v: StateVector) -> StateVector:
    if u.dimension != v.dimension:
        raise ValueError(
            f"dimension mismatch: operator {u.dimension}, state {v.dimension}"
        )
    return StateVector(u.apply_to(v.amplitudes), atol=v.atol)


def measure(
        m: ProjectiveMeasurement,
        v: StateVector,
        atol: float = None
    ) -> Tuple[OutcomeDistribution, Dict[Hashable, StateVector]]:
    """Outcome distribution and post-measurement states. Outcomes with
    probability at most atol have no collapsed state."""
    if m.dimension != v.dimension:
        raise ValueError(
            f"dimension mismatch: measurement {m.dimension}, state {v.dimension}"
        )
    atol = tolerance(atol)
    probabilities = {}
    collapsed = {}
    for label in m.labels:
        projection = m.project(label, v.amplitudes)
        probability = float(np.vdot(projection, projection).real)
        probabilities[label] = probability
        if probability > atol:
            collapsed[label] = StateVector(projection / np.sqrt(probability))
    return OutcomeDistribution(probabilities, atol=atol), collapsed


def l1_distance(d1: OutcomeDistribution, d2: OutcomeDistribution) -> float:
    labels = set(d1.labels) | set(d2.labels)
    return float(sum(abs(d1.get(label) - d2.get(label)) for label in labels))


def von_neumann_entropy(rho: DensityMatrix) -> float:
    """Entropy in bits, 0 log 0 = 0"""
    eigenvalues = np.clip(rho.eigenvalues(), 0.0, None)
    return float(np.sum(entr(eigenvalues)) / np.log(2))


def complete_isometry(
        images: Mapping[int, np.ndarray],
        dimension: int,
        atol: float = None
    ) -> UnitaryOp:
    """Extends a partial map basis state -> image to a unitary.

    The given images must be orthonormal. Basis states without an image
    receive, in increasing order, the vectors obtained by Gram-Schmidt
    orthonormalization of e_0, e_1, ... against everything chosen so far.
    When every column ends up a computational basis vector the result is
    stored as a permutation.
    """
    atol = tolerance(atol)
    chosen = [np.asarray(images[k], dtype=complex) for k in sorted(images)]
    if chosen:
        block = np.column_stack(chosen)
        gram = block.conj().T @ block
        if np.abs(gram - np.eye(len(chosen))).max() > atol:
            raise ValueError("partial images are not orthonormal")

    missing = [k for k in range(dimension) if k not in images]
    fill = []
    basis = np.zeros((dimension, dimension), dtype=complex)
    size = len(chosen)
    if chosen:
        basis[:, :size] = np.column_stack(chosen)
    for k in range(dimension):
        if len(fill) == len(missing):
            break
        candidate = np.zeros(dimension, dtype=complex)
        candidate[k] = 1.0
        # two passes of classical Gram-Schmidt against the chosen columns
        for _ in range(2):
            block = basis[:, :size]
            candidate = candidate - block @ (block.conj().T @ candidate)
        norm = np.linalg.norm(candidate)
        if norm > COMPLETION_THRESHOLD:
            candidate = candidate / norm
            basis[:, size] = candidate
            size += 1
            fill.append(candidate)

    columns = dict(images)
    columns.update(zip(missing, fill))
    matrix = np.column_stack(
        [np.asarray(columns[k], dtype=complex) for k in range(dimension)]
    )

    if np.all((matrix == 0) | (matrix == 1)) and np.all(matrix.sum(axis=0) == 1):
        return UnitaryOp.from_permutation(np.argmax(matrix.real, axis=0))
    return UnitaryOp.from_matrix(matrix, atol=atol)


def random_state(dimension: int, rng: np.random.Generator) -> StateVector:
    """Haar-random pure state"""
    amplitudes = rng.normal(size=dimension) + 1j * rng.normal(size=dimension)
    return StateVector.normalized(amplitudes)


def random_unitary(dimension: int, rng: np.random.Generator) -> UnitaryOp:
    """Haar-random unitary"""
    if dimension == 1:
        return UnitaryOp.from_matrix(np.exp(2j * np.pi * rng.random()).reshape(1, 1))
    return UnitaryOp.from_matrix(unitary_group.rvs(dimension, random_state=rng))
