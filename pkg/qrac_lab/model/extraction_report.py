from dataclasses import dataclass

from qrac_lab.model.outcome_distribution import OutcomeDistribution


@dataclass(frozen=True)
class ExtractionReport():
    m :int
    x :str
    epsilon :float
    distribution :OutcomeDistribution
    failure :float
    failure_bound :float
    hybrid_distance :float
    hybrid_bound :float

    @property
    def within_bounds(self) -> bool:
        return (
            self.failure <= self.failure_bound + 1e-9
            and self.hybrid_distance <= self.hybrid_bound + 1e-9
        )

    def to_dict(self):
        return {
            "m": self.m,
            "x": self.x,
            "epsilon": self.epsilon,
            "distribution": self.distribution,
            "failure": self.failure,
            "failure_bound": self.failure_bound,
            "hybrid_distance": self.hybrid_distance,
            "hybrid_bound": self.hybrid_bound
        }
