from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Dict, Hashable, Mapping

from qrac_lab.utils.config import tolerance


@dataclass(frozen=True)
class OutcomeDistribution():
    """Probability per outcome label; labels not present read as 0"""
    probabilities :Mapping[Hashable, float]
    atol :float = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "atol", tolerance(self.atol))
        probabilities = {
            label: float(probability)
            for label, probability in self.probabilities.items()
        }
        for label, probability in probabilities.items():
            if probability < -self.atol or probability > 1.0 + self.atol:
                raise ValueError(
                    f"probability of outcome {label!r} is {probability!r}, "
                    f"outside [0, 1]"
                )
        total = sum(probabilities.values())
        if abs(total - 1.0) > self.atol:
            raise ValueError(f"outcome probabilities sum to {total!r}, not 1")
        object.__setattr__(self, "probabilities", MappingProxyType(probabilities))

    def __hash__(self):
        return hash(tuple(sorted(self.probabilities.items(), key=repr)))

    def get(self, label: Hashable, default: float = 0.0) -> float:
        return self.probabilities.get(label, default)

    @property
    def labels(self):
        return tuple(self.probabilities.keys())

    @property
    def support(self):
        return tuple(
            label for label, probability in self.probabilities.items()
            if probability > self.atol
        )

    def to_dict(self) -> Dict[str, float]:
        return {str(label): p for label, p in self.probabilities.items()}
