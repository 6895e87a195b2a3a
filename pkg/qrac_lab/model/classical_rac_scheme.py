from dataclasses import dataclass, field
from functools import cached_property
from types import MappingProxyType
from typing import Mapping, Tuple

import numpy as np

from qrac_lab.utils.bits import all_strings, to_int

WEIGHT_TOLERANCE = 1e-12


def _check_weights(weights, what: str) -> Tuple[float, ...]:
    weights = tuple(float(weight) for weight in weights)
    if len(weights) == 0 or min(weights) < 0:
        raise ValueError(f"{what} weights must be a non-empty distribution")
    if abs(sum(weights) - 1.0) > WEIGHT_TOLERANCE:
        raise ValueError(f"{what} weights must sum to 1, got {sum(weights)!r}")
    return weights


@dataclass(frozen=True, eq=False)
class ClassicalRacScheme():
    """Classical (m, n, p) random access code.

    :encodings: for every m-bit x the n-bit codeword per encoder randomness
        index
    :decoders: per bit i a table from n-bit codeword to the decoded bit per
        decoder randomness index
    """
    m :int
    n :int
    weights :Tuple[float, ...]
    encodings :Mapping[str, Tuple[str, ...]] = field(repr=False)
    decoder_weights :Tuple[float, ...]
    decoders :Tuple[Mapping[str, Tuple[int, ...]], ...] = field(repr=False)
    name :str = ""

    def __post_init__(self):
        object.__setattr__(self, "weights", _check_weights(self.weights, "encoder"))
        object.__setattr__(
            self,
            "decoder_weights",
            _check_weights(self.decoder_weights, "decoder")
        )

        encodings = {x: tuple(codes) for x, codes in self.encodings.items()}
        if sorted(encodings) != all_strings(self.m):
            raise ValueError(
                f"encoder must be defined on all strings of length {self.m}"
            )
        for x, codes in encodings.items():
            if len(codes) != len(self.weights):
                raise ValueError(f"encoding of {x} has the wrong randomness size")
            for code in codes:
                if len(code) != self.n:
                    raise ValueError(
                        f"encoding of {x} is {code!r}, expected {self.n} bits"
                    )
        object.__setattr__(self, "encodings", MappingProxyType(encodings))

        if len(self.decoders) != self.m:
            raise ValueError(
                f"expected exactly {self.m} decoders, got {len(self.decoders)}"
            )
        codes = all_strings(self.n)
        decoders = []
        for i, table in enumerate(self.decoders):
            if sorted(table) != codes:
                raise ValueError(f"decoder of bit {i} must be total on {{0,1}}^{self.n}")
            table = {y: tuple(int(bit) for bit in bits) for y, bits in table.items()}
            for y, bits in table.items():
                if len(bits) != len(self.decoder_weights):
                    raise ValueError(
                        f"decoder of bit {i} on {y} has the wrong randomness size"
                    )
            decoders.append(MappingProxyType(table))
        object.__setattr__(self, "decoders", tuple(decoders))

    @cached_property
    def encoding_array(self) -> np.ndarray:
        """(2^m, |R|) integer codewords"""
        return np.array(
            [[to_int(code) for code in self.encodings[x]] for x in all_strings(self.m)],
            dtype=np.int64
        ).reshape(2 ** self.m, len(self.weights))

    @cached_property
    def decoder_array(self) -> np.ndarray:
        """(m, 2^n, |R'|) decoded bits"""
        return np.array(
            [
                [table[y] for y in all_strings(self.n)]
                for table in self.decoders
            ],
            dtype=np.uint8
        ).reshape(self.m, 2 ** self.n, len(self.decoder_weights))
