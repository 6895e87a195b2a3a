from dataclasses import dataclass
from types import MappingProxyType
from typing import FrozenSet, Mapping, Tuple


@dataclass(frozen=True, eq=False)
class Dfa():
    states :Tuple[str, ...]
    start :str
    accepting :FrozenSet[str]
    alphabet :Tuple[str, ...]
    transitions :Mapping[Tuple[str, str], str]
    name :str = ""

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        if self.start not in self.states:
            raise ValueError(f"start state {self.start!r} is not a state")
        if not self.accepting <= set(self.states):
            raise ValueError("accepting states must be states")
        transitions = dict(self.transitions)
        for state in self.states:
            for letter in self.alphabet:
                target = transitions.get((state, letter))
                if target is None:
                    raise ValueError(
                        f"transition from {state!r} on {letter!r} is missing"
                    )
                if target not in self.states:
                    raise ValueError(f"transition target {target!r} is not a state")
        object.__setattr__(self, "transitions", MappingProxyType(transitions))

    def run(self, word: str) -> str:
        state = self.start
        for letter in word:
            if letter not in self.alphabet:
                raise ValueError(f"letter {letter!r} is not in {self.alphabet}")
            state = self.transitions[(state, letter)]
        return state

    def accepts(self, word: str) -> bool:
        return self.run(word) in self.accepting
