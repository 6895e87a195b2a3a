from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping, Tuple

import numpy as np

from qrac_lab.model.projective_measurement import ProjectiveMeasurement
from qrac_lab.model.state_vector import StateVector
from qrac_lab.utils.bits import all_strings
from qrac_lab.utils.config import tolerance


@dataclass(frozen=True, eq=False, kw_only=True)
class QuantumEncoding():
    """Encoder part shared by random access and serial schemes.

    :m: number of encoded bits
    :n: number of codeword qubits
    :weights: probability of every randomness index r
    :codewords: for every m-bit string x the codeword per randomness index
    :ancilla: number of |0> qubits appended to the codeword before decoding
    :name: free-form description used in reports
    """
    m :int
    n :int
    weights :Tuple[float, ...]
    codewords :Mapping[str, Tuple[StateVector, ...]] = field(repr=False)
    ancilla :int = 0
    name :str = ""
    atol :float = field(default=None, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "atol", tolerance(self.atol))
        if self.m < 1:
            raise ValueError(f"an encoding needs m >= 1 bits, got {self.m}")
        if self.n < 0 or self.ancilla < 0:
            raise ValueError("qubit counts must be non-negative")

        weights = tuple(float(weight) for weight in self.weights)
        if len(weights) == 0 or min(weights) < -self.atol:
            raise ValueError("randomness weights must be a non-empty distribution")
        if abs(sum(weights) - 1.0) > self.atol:
            raise ValueError(
                f"randomness weights must sum to 1, got {sum(weights)!r}"
            )
        object.__setattr__(self, "weights", weights)

        codewords = {x: tuple(states) for x, states in self.codewords.items()}
        if sorted(codewords) != all_strings(self.m):
            raise ValueError(
                f"encoder must be defined on exactly the {2 ** self.m} "
                f"strings of length {self.m}"
            )
        dimension = 2 ** self.n
        for x, states in codewords.items():
            if len(states) != len(weights):
                raise ValueError(
                    f"codeword of {x} has {len(states)} randomness entries, "
                    f"expected {len(weights)}"
                )
            for state in states:
                if state.dimension != dimension:
                    raise ValueError(
                        f"codeword of {x} has dimension {state.dimension}, "
                        f"expected 2^{self.n} = {dimension}"
                    )
        object.__setattr__(self, "codewords", MappingProxyType(codewords))

    @property
    def randomness(self) -> int:
        return len(self.weights)

    @property
    def decoding_dimension(self) -> int:
        return 2 ** (self.n + self.ancilla)

    def codeword(self, x: str, r: int = 0) -> StateVector:
        return self.codewords[x][r]

    def extended_codeword(self, x: str, r: int = 0) -> np.ndarray:
        """Codeword followed by the |0...0> ancilla register"""
        amplitudes = self.codewords[x][r].amplitudes
        if self.ancilla == 0:
            return amplitudes
        padded = np.zeros((amplitudes.size, 2 ** self.ancilla), dtype=complex)
        padded[:, 0] = amplitudes
        return padded.reshape(-1)

    def decoder_for(self, i: int, x: str) -> ProjectiveMeasurement:
        raise NotImplementedError

    def _check_decoder(self, decoder: ProjectiveMeasurement, where: str):
        if decoder.dimension != self.decoding_dimension:
            raise ValueError(
                f"decoder {where} acts on dimension {decoder.dimension}, "
                f"expected {self.decoding_dimension}"
            )
        if 0 not in decoder.labels or 1 not in decoder.labels:
            raise ValueError(f"decoder {where} must have outcomes 0 and 1")
