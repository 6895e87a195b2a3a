from dataclasses import dataclass
from typing import Tuple

from qrac_lab.model.covering_code import CoveringCode
from qrac_lab.model.success_table import SuccessTable


@dataclass(frozen=True)
class Pad():
    """Permutation of the bit positions (0-based, position k of the
    permuted string holds bit permutation[k]) and an XOR mask"""
    permutation :Tuple[int, ...]
    mask :str

    def __post_init__(self):
        permutation = tuple(int(k) for k in self.permutation)
        object.__setattr__(self, "permutation", permutation)
        if sorted(permutation) != list(range(len(permutation))):
            raise ValueError(f"{permutation} is not a permutation of 0..{len(permutation) - 1}")
        if len(self.mask) != len(permutation) or set(self.mask) - {"0", "1"}:
            raise ValueError(f"mask {self.mask!r} must be a {len(permutation)}-bit string")

    @property
    def m(self) -> int:
        return len(self.permutation)

    def to_dict(self):
        return {"permutation": list(self.permutation), "mask": self.mask}


@dataclass(frozen=True)
class PadFamily():
    m :int
    pads :Tuple[Pad, ...]

    def __post_init__(self):
        object.__setattr__(self, "pads", tuple(self.pads))
        if len(self.pads) == 0:
            raise ValueError("a pad family needs at least one pad")
        for pad in self.pads:
            if pad.m != self.m:
                raise ValueError(f"pad of length {pad.m} in a family for m={self.m}")

    @property
    def ell(self) -> int:
        return len(self.pads)

    def to_dict(self):
        return {"m": self.m, "ell": self.ell, "pads": [pad.to_dict() for pad in self.pads]}


@dataclass(frozen=True)
class PadFamilyBuild():
    """Verified pad family together with its certificate

    :table: per-(x, i) fraction of pads that reproduce bit i of x
    :attempts: number of sampled families until one verified
    :deviation_bound: sampling deviation sqrt(ln(2 m 2^m) / (2 ell)) a
        uniform random family stays within with probability >= 1/2
    :spread: largest difference of per-bit success over i for a fixed x
    """
    family :PadFamily
    code :CoveringCode
    table :SuccessTable
    attempts :int
    deviation_bound :float
    spread :float

    def to_dict(self):
        return {
            "family": self.family,
            "code": self.code,
            "min_success": self.table.minimum,
            "attempts": self.attempts,
            "deviation_bound": self.deviation_bound,
            "spread": self.spread
        }
