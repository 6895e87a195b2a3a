from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from qrac_lab.model.state_vector import StateVector
from qrac_lab.utils.config import tolerance


@dataclass(frozen=True, eq=False)
class DensityMatrix():
    """Hermitian, positive semidefinite, unit trace"""
    entries :np.ndarray
    atol :float = field(default=None, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "atol", tolerance(self.atol))
        entries = np.array(self.entries, dtype=complex)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise ValueError(
                f"DensityMatrix must be square, got shape {entries.shape}"
            )
        if np.abs(entries - entries.conj().T).max(initial=0.0) > self.atol:
            raise ValueError("DensityMatrix must be Hermitian")
        trace = np.trace(entries).real
        if abs(trace - 1.0) > self.atol:
            raise ValueError(f"DensityMatrix must have unit trace, got {trace!r}")
        smallest = np.linalg.eigvalsh(entries).min()
        if smallest < -self.atol:
            raise ValueError(
                f"DensityMatrix must be positive semidefinite, smallest "
                f"eigenvalue {smallest!r}"
            )
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    @staticmethod
    def from_state(state: StateVector) -> "DensityMatrix":
        return DensityMatrix(np.outer(state.amplitudes, state.amplitudes.conj()))

    @staticmethod
    def mixture(
            weights: Sequence[float],
            states: Sequence[StateVector]
        ) -> "DensityMatrix":
        """sum_k w_k |psi_k><psi_k|"""
        amplitudes = np.array([state.amplitudes for state in states])
        weights = np.asarray(weights, dtype=float)
        entries = (amplitudes.T * weights) @ amplitudes.conj()
        return DensityMatrix(entries)

    @staticmethod
    def maximally_mixed(dimension: int) -> "DensityMatrix":
        return DensityMatrix(np.eye(dimension, dtype=complex) / dimension)

    @property
    def dimension(self) -> int:
        return self.entries.shape[0]

    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvalsh(self.entries)
