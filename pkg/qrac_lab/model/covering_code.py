from dataclasses import dataclass
from functools import cached_property
from typing import Tuple

import numpy as np

from qrac_lab.utils.bits import hamming_weights, to_int
from qrac_lab.utils.config import setting


@dataclass(frozen=True)
class CoveringCode():
    """Set of m-bit codewords such that every m-bit string lies within
    Hamming distance radius of one of them. The covering property is
    checked exhaustively on construction up to the configured guard."""
    m :int
    radius :int
    codewords :Tuple[str, ...]

    def __post_init__(self):
        codewords = tuple(sorted(set(self.codewords), key=to_int))
        object.__setattr__(self, "codewords", codewords)
        if not 0 <= self.radius <= self.m:
            raise ValueError(f"radius must be in [0, {self.m}], got {self.radius}")
        if len(codewords) == 0:
            raise ValueError("a covering code needs at least one codeword")
        for word in codewords:
            if len(word) != self.m or set(word) - {"0", "1"}:
                raise ValueError(f"codeword {word!r} is not an {self.m}-bit string")
        if self.m <= setting("guards", "max_covering_bits", int):
            uncovered = np.flatnonzero(self.distances() > self.radius)
            if uncovered.size > 0:
                raise ValueError(
                    f"{uncovered.size} strings are farther than {self.radius} "
                    f"from every codeword"
                )

    @cached_property
    def values(self) -> np.ndarray:
        return np.array([to_int(word) for word in self.codewords], dtype=np.int64)

    @property
    def size(self) -> int:
        return len(self.codewords)

    def distances(self) -> np.ndarray:
        """Distance of every m-bit string to its nearest codeword"""
        strings = np.arange(2 ** self.m, dtype=np.int64)
        best = np.full(strings.size, self.m + 1, dtype=np.int64)
        for value in self.values:
            np.minimum(best, hamming_weights(strings ^ value), out=best)
        return best

    def to_dict(self):
        return {"m": self.m, "radius": self.radius, "codewords": list(self.codewords)}
