from dataclasses import dataclass, field
from functools import cached_property
from types import MappingProxyType
from typing import Dict, FrozenSet, Mapping, Tuple

import numpy as np

from qrac_lab.constants import HaltingLabel, Symbols
from qrac_lab.model.projective_measurement import ProjectiveMeasurement
from qrac_lab.model.unitary_op import UnitaryOp


@dataclass(frozen=True, eq=False)
class Qfa():
    """1-way quantum finite automaton.

    Basis states are named; accepting and rejecting states are listed,
    every other state is non-halting. One unitary of dimension |Q| per
    symbol of the working alphabet (input letters plus both end markers).
    """
    states :Tuple[str, ...]
    accepting :FrozenSet[str]
    rejecting :FrozenSet[str]
    start :str
    alphabet :Tuple[str, ...]
    unitaries :Mapping[str, UnitaryOp] = field(repr=False)
    name :str = ""

    def __post_init__(self):
        states = tuple(self.states)
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        object.__setattr__(self, "rejecting", frozenset(self.rejecting))
        object.__setattr__(self, "alphabet", tuple(self.alphabet))

        if len(set(states)) != len(states):
            raise ValueError("automaton state names must be unique")
        if not (self.accepting | self.rejecting) <= set(states):
            raise ValueError("halting states must be automaton states")
        if self.accepting & self.rejecting:
            raise ValueError(
                f"states {sorted(self.accepting & self.rejecting)} are both "
                f"accepting and rejecting"
            )
        if self.start not in states:
            raise ValueError(f"start state {self.start!r} is not a state")
        if self.start in self.accepting | self.rejecting:
            raise ValueError(f"start state {self.start!r} must be non-halting")
        reserved = set(self.alphabet) & set(Symbols.END_MARKERS)
        if reserved:
            raise ValueError(f"end markers {sorted(reserved)} cannot be input letters")

        unitaries = dict(self.unitaries)
        expected = set(self.alphabet) | set(Symbols.END_MARKERS)
        if set(unitaries) != expected:
            raise ValueError(
                f"unitaries are needed for exactly {sorted(expected)}, got "
                f"{sorted(unitaries)}"
            )
        for symbol, unitary in unitaries.items():
            if unitary.dimension != len(states):
                raise ValueError(
                    f"unitary of {symbol!r} has dimension {unitary.dimension}, "
                    f"expected {len(states)}"
                )
        object.__setattr__(self, "unitaries", MappingProxyType(unitaries))

    @property
    def dimension(self) -> int:
        return len(self.states)

    @property
    def non_halting(self) -> Tuple[str, ...]:
        halting = self.accepting | self.rejecting
        return tuple(state for state in self.states if state not in halting)

    @cached_property
    def index(self) -> Dict[str, int]:
        return {state: k for k, state in enumerate(self.states)}

    @cached_property
    def start_vector(self) -> np.ndarray:
        vector = np.zeros(self.dimension, dtype=complex)
        vector[self.index[self.start]] = 1.0
        return vector

    @cached_property
    def halting_measurement(self) -> ProjectiveMeasurement:
        """E_acc + E_rej + E_non in the computational basis"""
        return ProjectiveMeasurement.from_partition(
            self.dimension,
            {
                HaltingLabel.ACCEPT: [k for k, q in enumerate(self.states) if q in self.accepting],
                HaltingLabel.REJECT: [k for k, q in enumerate(self.states) if q in self.rejecting],
                HaltingLabel.NON_HALTING: [self.index[q] for q in self.non_halting],
            }
        )

    def unitary(self, symbol: str) -> UnitaryOp:
        if symbol not in self.unitaries:
            raise ValueError(
                f"symbol {symbol!r} is not in the working alphabet "
                f"{sorted(self.unitaries)}"
            )
        return self.unitaries[symbol]

    @property
    def is_reversible(self) -> bool:
        return all(unitary.is_permutation for unitary in self.unitaries.values())
