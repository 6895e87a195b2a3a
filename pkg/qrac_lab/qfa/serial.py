from math import ceil, log2
from typing import Dict

from qrac_lab.constants import HaltingLabel, Symbols
from qrac_lab.errors import InfeasibleParametersError, VerificationError
from qrac_lab.model import ProjectiveMeasurement, Qfa, SerialScheme, StateVector, UnitaryOp
from qrac_lab.qfa.semantics import prefix_state
from qrac_lab.utils.bits import all_strings
from qrac_lab.utils.config import tolerance
from qrac_lab.utils.logging import get_logger

# serial decoder labels: E_acc reads as bit 1, E_rej as bit 0
DECODER_LABELS = {
    HaltingLabel.ACCEPT: 1,
    HaltingLabel.REJECT: 0,
    HaltingLabel.NON_HALTING: HaltingLabel.NON_HALTING,
}


def halted_before(a: Qfa, n: int) -> float:
    """Largest probability of halting while reading the left end marker
    and n letters, over all words of length n over {a, b}"""
    return max(
        prefix_state(a, Symbols.bits_to_word(x))[1] for x in all_strings(n)
    )


def serial_from_qfa(a: Qfa, n: int) -> SerialScheme:
    """Serial encoding of n bits read off an n-restricted automaton.

    The codeword of x is the automaton state after the left end marker
    and the word for x (bit 1 is the letter a, bit 0 is b), zero padded to
    a power of two. Bit i with known suffix y is decoded by applying
    U_$ U_y^-1 and measuring the halting observable: E_acc answers 1,
    E_rej answers 0, E_non and the padding answer "non".

    :raises VerificationError: the automaton halts on some prefix of
        length <= n
    """
    if n < 1:
        raise InfeasibleParametersError(f"serial encodings need n >= 1, got {n}")
    for letter in Symbols.LN_ALPHABET:
        if letter not in a.alphabet:
            raise InfeasibleParametersError(
                f"automaton alphabet {a.alphabet} lacks the letter {letter!r}"
            )
    halted = halted_before(a, n)
    if halted > tolerance():
        raise VerificationError(
            f"automaton is not {n}-restricted: halts with probability "
            f"{halted:.3e} within the first {n} letters"
        )

    qubits = ceil(log2(a.dimension)) if a.dimension > 1 else 0
    dimension = 2 ** qubits
    unitaries = {symbol: a.unitary(symbol).padded(dimension) for symbol in a.unitaries}

    codewords = {}
    for x in all_strings(n):
        psi, _ = prefix_state(a, Symbols.bits_to_word(x))
        codewords[x] = (StateVector(psi).zero_padded(dimension),)

    partition = {
        DECODER_LABELS[label]: list(a.halting_measurement.indices(label))
        for label in HaltingLabel.ALL
    }
    partition[HaltingLabel.NON_HALTING].extend(range(a.dimension, dimension))
    halting = ProjectiveMeasurement.from_partition(dimension, partition)

    # rewind[y] = U_y^-1 = U_{y_1}^-1 ... U_{y_last}^-1
    rewind: Dict[str, UnitaryOp] = {"": UnitaryOp.identity(dimension)}
    for length in range(1, n):
        for y in all_strings(length):
            letter = Symbols.bits_to_word(y[0])
            rewind[y] = unitaries[letter].inverse.compose(rewind[y[1:]])

    decoders = {}
    for i in range(n):
        for suffix in all_strings(n - 1 - i):
            decoders[(i, suffix)] = halting.after(
                unitaries[Symbols.DOLLAR].compose(rewind[suffix])
            )

    get_logger(__name__).info(
        f"serial encoding of {n} bits into {qubits} qubits from {a.name or 'automaton'}"
    )
    return SerialScheme(
        m=n,
        n=qubits,
        weights=(1.0,),
        codewords=codewords,
        decoders=decoders,
        name=f"serial({a.name or 'qfa'}, {n})"
    )
