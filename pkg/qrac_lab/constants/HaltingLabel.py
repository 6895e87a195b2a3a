class HaltingLabel:
    """Outcome labels of the E_acc + E_rej + E_non observable"""
    ACCEPT                      = 'acc'
    REJECT                      = 'rej'
    NON_HALTING                 = 'non'

    ALL                         = (ACCEPT, REJECT, NON_HALTING)
