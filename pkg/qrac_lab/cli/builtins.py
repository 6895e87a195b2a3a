import os
from typing import Optional, Union

from qrac_lab.documents import load_automaton, load_scheme
from qrac_lab.errors import DocumentFormatError, InfeasibleParametersError
from qrac_lab.model import Dfa, Qfa, QracScheme, SerialScheme
from qrac_lab.qfa import dfa_as_qfa, dfa_Ln, rfa_Ln
from qrac_lab.qrac import amplify, qrac_2to1, qrac_3to1, tensor_power
from qrac_lab.utils.logging import get_logger

SCHEMES = {
    "2to1": qrac_2to1,
    "3to1": qrac_3to1,
}

# Builtin automata: ln:N embeds the minimal DFA of L_N, rfa:N is the
# reversible recognizer; both over transcripts of up to N + 2 letters
AUTOMATA = {
    "ln": lambda n: dfa_as_qfa(dfa_Ln(n), n + 2),
    "rfa": rfa_Ln,
    "dfa": dfa_Ln,
}


def _parse_builtin(name: str):
    prefix, _, argument = name.partition(":")
    if prefix not in AUTOMATA or not argument.isdigit():
        return None
    return AUTOMATA[prefix](int(argument))


def resolve_automaton(name: str) -> Union[Qfa, Dfa]:
    """Builtin ln:N, rfa:N, dfa:N or a JSON automaton file"""
    builtin = _parse_builtin(name)
    if builtin is not None:
        return builtin
    if not os.path.exists(name):
        raise DocumentFormatError(
            f"{name!r} is neither a builtin (ln:N, rfa:N, dfa:N) nor an "
            f"existing automaton file"
        )
    return load_automaton(name)


def builtin_horizon(name: str) -> Optional[int]:
    """N + 2 for the builtin dfa:N, the horizon ln:N is built with"""
    prefix, _, argument = name.partition(":")
    if prefix == "dfa" and argument.isdigit():
        return int(argument) + 2
    return None


def as_qfa(
        name: str,
        a: Union[Qfa, Dfa],
        horizon: Optional[int] = None,
        fallback: Optional[int] = None
    ) -> Qfa:
    """A Qfa as is, a Dfa embedded over transcripts of up to horizon
    letters. Without an explicit horizon the builtin dfa:N takes N + 2 and
    any other DFA the fallback.

    :raises InfeasibleParametersError: a DFA with neither a horizon nor a
        fallback
    """
    if not isinstance(a, Dfa):
        if horizon is not None:
            get_logger(__name__).warning(f"--horizon ignored for the quantum automaton {name!r}")
        return a
    if horizon is None:
        horizon = builtin_horizon(name)
    if horizon is None:
        horizon = fallback
    if horizon is None:
        raise InfeasibleParametersError(
            f"{name!r} is a DFA; pass --horizon to fix the longest word its embedding decides"
        )
    return dfa_as_qfa(a, horizon)


def resolve_scheme(
        name: str,
        tensor: int = 1,
        copies: int = 1
    ) -> Union[QracScheme, SerialScheme]:
    """Builtin 2to1 / 3to1, optionally amplified by majority over copies
    and then tensored, or a JSON scheme file taken as is"""
    if name in SCHEMES:
        scheme = SCHEMES[name]()
        if copies != 1:
            scheme = amplify(scheme, copies)
        if tensor != 1:
            scheme = tensor_power(scheme, tensor)
        return scheme
    if not os.path.exists(name):
        raise DocumentFormatError(
            f"{name!r} is neither a builtin scheme {sorted(SCHEMES)} nor an "
            f"existing scheme file"
        )
    if tensor != 1 or copies != 1:
        raise InfeasibleParametersError(
            "--tensor and --amplify apply to builtin schemes only"
        )
    return load_scheme(name)
