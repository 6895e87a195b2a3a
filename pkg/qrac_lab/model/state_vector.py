from dataclasses import dataclass, field

import numpy as np

from qrac_lab.utils.config import tolerance


@dataclass(frozen=True, eq=False)
class StateVector():
    """Unit vector of complex amplitudes.

    Any finite dimension is accepted so that automaton states of |Q| basis
    states fit; qubit registers (dimension 2^k) are checked by the schemes
    that need them. Index 0 is the all-zero basis state and the leftmost
    qubit is the most significant bit of the index.
    """
    amplitudes :np.ndarray
    atol :float = field(default=None, repr=False)

    def __post_init__(self):
        amplitudes = np.array(self.amplitudes, dtype=complex).reshape(-1)
        amplitudes.setflags(write=False)
        object.__setattr__(self, "amplitudes", amplitudes)
        object.__setattr__(self, "atol", tolerance(self.atol))

        if amplitudes.size < 1:
            raise ValueError("StateVector needs at least one amplitude")
        squared_norm = float(np.vdot(amplitudes, amplitudes).real)
        if abs(squared_norm - 1.0) > self.atol:
            raise ValueError(
                f"StateVector must have unit norm, got squared norm "
                f"{squared_norm!r}"
            )

    @staticmethod
    def basis(dimension: int, index: int) -> "StateVector":
        amplitudes = np.zeros(dimension, dtype=complex)
        amplitudes[index] = 1.0
        return StateVector(amplitudes)

    @staticmethod
    def normalized(amplitudes) -> "StateVector":
        amplitudes = np.asarray(amplitudes, dtype=complex)
        return StateVector(amplitudes / np.linalg.norm(amplitudes))

    @property
    def dimension(self) -> int:
        return self.amplitudes.size

    @property
    def is_qubit_register(self) -> bool:
        dimension = self.dimension
        return dimension & (dimension - 1) == 0

    @property
    def qubit_count(self) -> int:
        if not self.is_qubit_register:
            raise ValueError(
                f"dimension {self.dimension} is not a power of two"
            )
        return self.dimension.bit_length() - 1

    def zero_padded(self, dimension: int) -> "StateVector":
        """Embeds the state into a larger space, new coordinates get
        amplitude 0"""
        if dimension < self.dimension:
            raise ValueError(
                f"cannot pad dimension {self.dimension} down to {dimension}"
            )
        amplitudes = np.zeros(dimension, dtype=complex)
        amplitudes[:self.dimension] = self.amplitudes
        return StateVector(amplitudes, atol=self.atol)

    def isclose(self, other: "StateVector", atol: float = None) -> bool:
        return (
            self.dimension == other.dimension
            and np.allclose(
                self.amplitudes, other.amplitudes, rtol=0, atol=tolerance(atol)
            )
        )
