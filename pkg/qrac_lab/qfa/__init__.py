from .semantics import run, prefix_state, qfa_size_report
from .languages import (
    membership_Ln,
    dfa_Ln,
    rfa_Ln,
    dfa_as_qfa,
    transcript_automaton,
)
from .restriction import restrict, with_decision_noise
from .serial import serial_from_qfa, halted_before

__all__ = [
    run,
    prefix_state,
    qfa_size_report,
    membership_Ln,
    dfa_Ln,
    rfa_Ln,
    dfa_as_qfa,
    transcript_automaton,
    restrict,
    with_decision_noise,
    serial_from_qfa,
    halted_before
]
