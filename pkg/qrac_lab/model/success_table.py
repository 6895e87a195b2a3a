from dataclasses import dataclass, field
from types import MappingProxyType
from typing import List, Mapping, Tuple


@dataclass(frozen=True)
class SuccessTable():
    """Success probability of decoding bit i of the string x, for every
    (x, i) with 0-based bit positions"""
    m :int
    probabilities :Mapping[Tuple[str, int], float] = field(hash=False)

    def __post_init__(self):
        object.__setattr__(
            self,
            "probabilities",
            MappingProxyType(dict(sorted(self.probabilities.items())))
        )

    @property
    def minimum(self) -> float:
        return min(self.probabilities.values())

    @property
    def maximum(self) -> float:
        return max(self.probabilities.values())

    @property
    def error(self) -> float:
        """epsilon of the scheme, 1 - min success"""
        return 1.0 - self.minimum

    def get(self, x: str, i: int) -> float:
        return self.probabilities[(x, i)]

    def rows(self) -> List[Tuple[str, int, float]]:
        return [(x, i, p) for (x, i), p in self.probabilities.items()]

    def per_bit(self, x: str) -> List[float]:
        return [self.probabilities[(x, i)] for i in range(self.m)]

    def to_dict(self):
        return {
            "m": self.m,
            "min": self.minimum,
            "rows": [{"x": x, "i": i, "probability": p} for x, i, p in self.rows()]
        }
