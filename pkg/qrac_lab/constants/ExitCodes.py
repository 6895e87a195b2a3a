class ExitCodes:
    SUCCESS                     = 0
    INFEASIBLE_PARAMETERS       = 2     # size guards, vacuous p, even t, ...
    VERIFICATION_FAILED         = 3     # retry cap exhausted, automaton not restricted
    INPUT_FORMAT                = 4     # malformed scheme / automaton documents
