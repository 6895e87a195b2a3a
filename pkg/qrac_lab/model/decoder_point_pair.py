from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

Point = Tuple[Fraction, Fraction]


def _as_point(point) -> Point:
    x, y = (Fraction(coordinate) for coordinate in point)
    if not (0 <= x <= 1 and 0 <= y <= 1):
        raise ValueError(f"point {point} is outside the unit square")
    return (x, y)


@dataclass(frozen=True)
class DecoderPointPair():
    """Decoding behaviour of a one-bit classical code. The point P^b holds
    the probabilities that decoder 0 and decoder 1 answer 1 when the
    codeword is b. Coordinates are kept as exact fractions; floats are
    converted exactly."""
    p0 :Point
    p1 :Point

    def __post_init__(self):
        object.__setattr__(self, "p0", _as_point(self.p0))
        object.__setattr__(self, "p1", _as_point(self.p1))

    def point(self, bit: int) -> Point:
        return self.p1 if bit else self.p0

    def to_dict(self):
        return {"p0": list(self.p0), "p1": list(self.p1)}
