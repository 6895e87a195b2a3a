from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping, Tuple

from qrac_lab.model.projective_measurement import ProjectiveMeasurement
from qrac_lab.model.quantum_encoding import QuantumEncoding
from qrac_lab.utils.bits import all_strings


@dataclass(frozen=True, eq=False, kw_only=True)
class SerialScheme(QuantumEncoding):
    """Encoding whose decoder for bit i may depend on the known suffix
    x[i+1:]. Decoders may carry extra outcomes besides 0 and 1, such mass
    never counts as a correct answer."""
    decoders :Mapping[Tuple[int, str], ProjectiveMeasurement]

    def __post_init__(self):
        super().__post_init__()
        decoders = dict(self.decoders)
        for i in range(self.m):
            for suffix in all_strings(self.m - 1 - i):
                if (i, suffix) not in decoders:
                    raise ValueError(
                        f"missing decoder for bit {i} with suffix {suffix!r}"
                    )
                self._check_decoder(decoders[(i, suffix)], f"({i}, {suffix!r})")
        object.__setattr__(self, "decoders", MappingProxyType(decoders))

    def decoder_for(self, i: int, x: str) -> ProjectiveMeasurement:
        return self.decoders[(i, x[i + 1:])]
