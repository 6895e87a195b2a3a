from enum import Enum
from fractions import Fraction


class Quadrant(Enum):
    """Open quarters of the unit square. The value is the two-bit string
    whose decoding corner the quarter is closest to (first coordinate is
    bit 0, second coordinate is bit 1).
    """
    LOWER_LEFT = "00"
    UPPER_LEFT = "01"
    LOWER_RIGHT = "10"
    UPPER_RIGHT = "11"

    @property
    def favored_string(self) -> str:
        return self.value

    @property
    def bounds(self):
        """((x_low, x_high), (y_low, y_high)) of the open quarter"""
        halves = {
            "0": (Fraction(0), Fraction(1, 2)),
            "1": (Fraction(1, 2), Fraction(1)),
        }
        return (halves[self.value[0]], halves[self.value[1]])
