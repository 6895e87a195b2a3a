from dataclasses import dataclass, field
from typing import Tuple

from qrac_lab.utils.config import tolerance


@dataclass(frozen=True)
class RunResult():
    """Outcome of running an automaton on one word.

    :halting_profile: cumulative halted probability after the left end
        marker, after every letter and after the right end marker
    """
    p_accept :float
    p_reject :float
    halting_profile :Tuple[float, ...]
    atol :float = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "atol", tolerance(self.atol))
        object.__setattr__(self, "halting_profile", tuple(self.halting_profile))
        if self.p_accept + self.p_reject > 1.0 + self.atol:
            raise ValueError("accept and reject probability exceed 1")
        for before, after in zip(self.halting_profile, self.halting_profile[1:]):
            if after < before - self.atol:
                raise ValueError("halting profile must be non-decreasing")

    @property
    def residual(self) -> float:
        """Non-halting mass left after the right end marker"""
        return max(0.0, 1.0 - self.p_accept - self.p_reject)

    def to_dict(self):
        return {
            "p_accept": self.p_accept,
            "p_reject": self.p_reject,
            "residual": self.residual,
            "halting_profile": list(self.halting_profile)
        }
