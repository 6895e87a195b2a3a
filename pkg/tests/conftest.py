import numpy as np
import pytest

from qrac_lab.model import Qfa, UnitaryOp


def givens(dimension: int, i: int, j: int, theta: float) -> np.ndarray:
    """Real rotation by theta in the (i, j) plane"""
    g = np.eye(dimension)
    g[i, i] = g[j, j] = np.cos(theta)
    g[i, j], g[j, i] = -np.sin(theta), np.sin(theta)
    return g


@pytest.fixture
def toy_qfa() -> Qfa:
    """Four state automaton that may halt in the middle of a word: b leaks
    amplitude of q1 into acc"""
    states = ("q0", "q1", "acc", "rej")
    return Qfa(
        states=states,
        accepting={"acc"},
        rejecting={"rej"},
        start="q0",
        alphabet=("a", "b"),
        unitaries={
            "^": UnitaryOp.identity(4),
            "a": UnitaryOp.from_matrix(givens(4, 0, 1, np.pi / 5)),
            "b": UnitaryOp.from_matrix(givens(4, 1, 2, np.pi / 7)),
            "$": UnitaryOp.from_matrix(givens(4, 0, 3, np.pi / 3) @ givens(4, 1, 2, np.pi / 4)),
        },
        name="toy"
    )


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(1234)


def words(alphabet, max_length):
    result = [""]
    frontier = [""]
    for _ in range(max_length):
        frontier = [w + letter for w in frontier for letter in alphabet]
        result += frontier
    return result
