from itertools import product
from typing import Callable, Dict, List, Sequence

from qrac_lab.constants import Symbols
from qrac_lab.errors import InfeasibleParametersError
from qrac_lab.model import Dfa, Qfa, UnitaryOp
from qrac_lab.utils.logging import get_logger

# Largest n for which the transcript recognizer of L_n is built
MAX_TRANSCRIPT_N = 16

DEAD = "dead"


def _check_letters(word: str, alphabet: Sequence[str]):
    for letter in word:
        if letter not in alphabet:
            raise ValueError(f"letter {letter!r} is not in {tuple(alphabet)}")


def membership_Ln(n: int, word: str) -> bool:
    """word is in L_n iff it ends in a and has at most n + 1 letters"""
    _check_letters(word, Symbols.LN_ALPHABET)
    return word.endswith(Symbols.LETTER_A) and len(word) <= n + 1


def dfa_Ln(n: int) -> Dfa:
    """2n + 3 states: b0..bn (start, or last letter b), a1..a(n+1) (last
    letter a, accepting) and a dead state."""
    if n < 0:
        raise InfeasibleParametersError(f"L_n needs n >= 0, got {n}")
    a, b = Symbols.LETTER_A, Symbols.LETTER_B
    b_states = [f"b{k}" for k in range(n + 1)]
    a_states = [f"a{k}" for k in range(1, n + 2)]
    transitions = {}
    for k in range(n + 2):
        sources = ([f"b{k}"] if k <= n else []) + ([f"a{k}"] if k >= 1 else [])
        for source in sources:
            transitions[(source, a)] = f"a{k + 1}" if k + 1 <= n + 1 else DEAD
            transitions[(source, b)] = f"b{k + 1}" if k + 1 <= n else DEAD
    transitions[(DEAD, a)] = DEAD
    transitions[(DEAD, b)] = DEAD
    return Dfa(
        states=tuple(b_states + a_states + [DEAD]),
        start="b0",
        accepting=frozenset(a_states),
        alphabet=Symbols.LN_ALPHABET,
        transitions=transitions,
        name=f"dfa_L{n}"
    )


def _words(alphabet: Sequence[str], length: int) -> List[str]:
    return ["".join(letters) for letters in product(alphabet, repeat=length)]


def _complete(mapping: Dict[int, int], dimension: int) -> UnitaryOp:
    """Extends an injective partial map on basis states to a permutation by
    pairing the unmapped states with the unused images in index order"""
    used = set(mapping.values())
    sources = [k for k in range(dimension) if k not in mapping]
    targets = [k for k in range(dimension) if k not in used]
    images = [0] * dimension
    for source, target in mapping.items():
        images[source] = target
    for source, target in zip(sources, targets):
        images[source] = target
    return UnitaryOp.from_permutation(images)


def transcript_automaton(
        alphabet: Sequence[str],
        horizon: int,
        accepts: Callable[[str], bool],
        name: str = ""
    ) -> Qfa:
    """Reversible automaton that records the word read so far.

    States "t:w" hold transcripts of up to horizon letters. A letter read
    after a full transcript moves to the rejecting state "over:w". The
    right end marker moves "t:w" to the halting tag "acc:w" or "rej:w"
    according to accepts(w). Every unitary is a permutation.
    """
    alphabet = tuple(alphabet)
    transcripts = [w for length in range(horizon + 1) for w in _words(alphabet, length)]
    full = _words(alphabet, horizon)
    tags = [("acc:" if accepts(w) else "rej:") + w for w in transcripts]
    states = [f"t:{w}" for w in transcripts] + tags + [f"over:{w}" for w in full]
    index = {state: k for k, state in enumerate(states)}

    unitaries = {Symbols.CENT: UnitaryOp.identity(len(states))}
    for letter in alphabet:
        mapping = {}
        for w in transcripts:
            if len(w) < horizon:
                mapping[index[f"t:{w}"]] = index[f"t:{w}{letter}"]
            else:
                mapping[index[f"t:{w}"]] = index[f"over:{w}"]
        unitaries[letter] = _complete(mapping, len(states))
    unitaries[Symbols.DOLLAR] = _complete(
        {index[f"t:{w}"]: index[tag] for w, tag in zip(transcripts, tags)},
        len(states)
    )

    get_logger(__name__).info(
        f"transcript automaton horizon={horizon}: {len(states)} states"
    )
    return Qfa(
        states=tuple(states),
        accepting=frozenset(tag for tag in tags if tag.startswith("acc:")),
        rejecting=frozenset(
            [tag for tag in tags if tag.startswith("rej:")] + [f"over:{w}" for w in full]
        ),
        start="t:",
        alphabet=alphabet,
        unitaries=unitaries,
        name=name
    )


def rfa_Ln(n: int) -> Qfa:
    """Reversible recognizer of L_n over transcripts of up to n + 2 letters"""
    if not 0 <= n <= MAX_TRANSCRIPT_N:
        raise InfeasibleParametersError(
            f"rfa_Ln is built for 0 <= n <= {MAX_TRANSCRIPT_N}, got {n}"
        )
    return transcript_automaton(
        Symbols.LN_ALPHABET,
        n + 2,
        lambda w: membership_Ln(n, w),
        name=f"rfa_L{n}"
    )


def dfa_as_qfa(dfa: Dfa, horizon: int) -> Qfa:
    """Permutation automaton deciding words of up to horizon letters like
    dfa and rejecting longer ones. Exact for L_n whenever
    horizon >= n + 1."""
    if horizon < 0:
        raise InfeasibleParametersError(f"horizon must be >= 0, got {horizon}")
    return transcript_automaton(
        dfa.alphabet,
        horizon,
        dfa.accepts,
        name=f"qfa({dfa.name or 'dfa'})"
    )
