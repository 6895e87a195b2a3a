import numpy as np

from qrac_lab.model import ProjectiveMeasurement, QracScheme, StateVector
from qrac_lab.utils.bits import all_strings, bit_matrix

SQRT_HALF = np.sqrt(0.5)

# 2 -> 1 bases: bit 0 is read in the u basis, bit 1 in the v basis
U_BASIS = (np.array([1.0, 0.0]), np.array([0.0, 1.0]))
V_BASIS = (np.array([SQRT_HALF, SQRT_HALF]), np.array([-SQRT_HALF, SQRT_HALF]))

# +1 / -1 eigenvectors of the Pauli operators X, Y, Z
PAULI_EIGENBASES = (
    (np.array([SQRT_HALF, SQRT_HALF]), np.array([SQRT_HALF, -SQRT_HALF])),
    (np.array([SQRT_HALF, 1j * SQRT_HALF]), np.array([SQRT_HALF, -1j * SQRT_HALF])),
    (np.array([1.0, 0.0]), np.array([0.0, 1.0])),
)


def _basis_measurement(basis) -> ProjectiveMeasurement:
    return ProjectiveMeasurement.from_subspaces([(0, basis[0]), (1, basis[1])])


def _bisector(u: np.ndarray, v: np.ndarray) -> StateVector:
    return StateVector.normalized(u + np.sign(np.dot(u, v)) * v)


def qrac_2to1() -> QracScheme:
    """Two bits in one qubit with success cos^2(pi/8) for both bits.

    The codeword of x0 x1 bisects the acute angle between the rays of
    u_{x0} and v_{x1}, so it sits at angle pi/8 from the basis vector each
    decoder is after.
    """
    codewords = {
        x: (_bisector(U_BASIS[int(x[0])], V_BASIS[int(x[1])]),)
        for x in all_strings(2)
    }
    return QracScheme(
        m=2,
        n=1,
        weights=(1.0,),
        codewords=codewords,
        decoders=(_basis_measurement(U_BASIS), _basis_measurement(V_BASIS)),
        name="2to1"
    )


def bloch_state(vector) -> StateVector:
    """Pure qubit state with the given unit Bloch vector"""
    rx, ry, rz = np.asarray(vector, dtype=float) / np.linalg.norm(vector)
    theta = np.arccos(np.clip(rz, -1.0, 1.0))
    phi = np.arctan2(ry, rx)
    return StateVector(
        [np.cos(theta / 2), np.exp(1j * phi) * np.sin(theta / 2)]
    )


def qrac_3to1() -> QracScheme:
    """Three bits in one qubit: the codeword's Bloch vector points to the
    cube corner ((-1)^x0, (-1)^x1, (-1)^x2)/sqrt(3) and decoder i measures
    the spin along axis i. Every bit succeeds with (1 + 1/sqrt(3))/2."""
    codewords = {
        x: (bloch_state([(-1) ** int(bit) for bit in x]),)
        for x in all_strings(3)
    }
    return QracScheme(
        m=3,
        n=1,
        weights=(1.0,),
        codewords=codewords,
        decoders=tuple(_basis_measurement(basis) for basis in PAULI_EIGENBASES),
        name="3to1"
    )


def computational_scheme(m: int) -> QracScheme:
    """x stored as the basis state |x>; every bit decodes with certainty"""
    bits = bit_matrix(m)
    dimension = 2 ** m
    decoders = tuple(
        ProjectiveMeasurement.from_partition(
            dimension,
            {
                0: np.flatnonzero(bits[:, i] == 0),
                1: np.flatnonzero(bits[:, i] == 1),
            }
        )
        for i in range(m)
    )
    codewords = {
        x: (StateVector.basis(dimension, k),)
        for k, x in enumerate(all_strings(m))
    }
    return QracScheme(
        m=m,
        n=m,
        weights=(1.0,),
        codewords=codewords,
        decoders=decoders,
        name=f"computational{m}"
    )
