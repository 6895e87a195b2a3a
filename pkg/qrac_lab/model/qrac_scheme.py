from dataclasses import dataclass
from typing import Tuple

from qrac_lab.model.projective_measurement import ProjectiveMeasurement
from qrac_lab.model.quantum_encoding import QuantumEncoding


@dataclass(frozen=True, eq=False, kw_only=True)
class QracScheme(QuantumEncoding):
    """(m, n, p) quantum random access code with one binary decoder per bit"""
    decoders :Tuple[ProjectiveMeasurement, ...]

    def __post_init__(self):
        super().__post_init__()
        decoders = tuple(self.decoders)
        if len(decoders) != self.m:
            raise ValueError(
                f"expected exactly {self.m} decoders, got {len(decoders)}"
            )
        for i, decoder in enumerate(decoders):
            self._check_decoder(decoder, f"of bit {i}")
            if set(decoder.labels) != {0, 1}:
                raise ValueError(f"decoder of bit {i} must be binary")
        object.__setattr__(self, "decoders", decoders)

    def decoder_for(self, i: int, x: str) -> ProjectiveMeasurement:
        return self.decoders[i]
