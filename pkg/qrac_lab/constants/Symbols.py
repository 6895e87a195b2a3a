class Symbols:
    """Reserved symbols of the automaton working alphabet and the fixed
    letter/bit identification used by serial encodings.
    """

    CENT                        = '^'                   # left end marker
    DOLLAR                      = '$'                   # right end marker
    END_MARKERS                 = (CENT, DOLLAR)

    LETTER_A                    = 'a'                   # read as bit 1 ("accept flavoured")
    LETTER_B                    = 'b'                   # read as bit 0
    LN_ALPHABET                 = (LETTER_A, LETTER_B)

    LETTER_TO_BIT               = {LETTER_A: '1', LETTER_B: '0'}
    BIT_TO_LETTER               = {'1': LETTER_A, '0': LETTER_B}

    @classmethod
    def word_to_bits(cls, word: str) -> str:
        return "".join(cls.LETTER_TO_BIT[letter] for letter in word)

    @classmethod
    def bits_to_word(cls, bits: str) -> str:
        return "".join(cls.BIT_TO_LETTER[bit] for bit in bits)
