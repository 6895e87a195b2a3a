from dataclasses import dataclass
from typing import Tuple

from qrac_lab.model.density_matrix import DensityMatrix
from qrac_lab.utils.config import tolerance


@dataclass(frozen=True, eq=False)
class Ensemble():
    members :Tuple[Tuple[float, DensityMatrix], ...]

    def __post_init__(self):
        members = tuple((float(p), rho) for p, rho in self.members)
        object.__setattr__(self, "members", members)
        if len(members) == 0:
            raise ValueError("an ensemble needs at least one member")
        atol = tolerance()
        if min(p for p, _ in members) < -atol:
            raise ValueError("ensemble probabilities must be non-negative")
        total = sum(p for p, _ in members)
        if abs(total - 1.0) > atol:
            raise ValueError(f"ensemble probabilities sum to {total!r}, not 1")
        dimensions = {rho.dimension for _, rho in members}
        if len(dimensions) != 1:
            raise ValueError(f"ensemble members differ in dimension: {sorted(dimensions)}")

    @property
    def dimension(self) -> int:
        return self.members[0][1].dimension

    def average(self) -> DensityMatrix:
        return DensityMatrix(sum(p * rho.entries for p, rho in self.members))
