from dataclasses import dataclass

from qrac_lab.documents.ProtocolParts import Document, Optional, Options, Required

# a complex number is either a real number or a [re, im] pair
Complex = Options([float, list[float]])
Matrix = list[list[Complex]]
Amplitudes = list[Complex]


@dataclass()
class PermutationDocument(Document):
    images = Required(list[int])


Operator = Options([PermutationDocument, Matrix])


@dataclass()
class QfaDocument(Document):
    name = Optional(str, default="")
    states = Required(list[str])
    accept = Required(list[str])
    reject = Required(list[str])
    start = Required(str)
    alphabet = Required(list[str])
    unitaries = Required(dict[str, Operator])


@dataclass()
class DfaDocument(Document):
    name = Optional(str, default="")
    states = Required(list[str])
    start = Required(str)
    accept = Required(list[str])
    alphabet = Required(list[str])
    transitions = Required(dict[str, dict[str, str]])


@dataclass()
class OutcomeDocument(Document):
    label = Required(Options([int, str]))
    indices = Required(list[int])


@dataclass()
class MeasurementDocument(Document):
    bit = Required(int)
    suffix = Optional(str, nullable=True)
    frame = Required(Operator)
    outcomes = Required(list[OutcomeDocument])


# a binary decoder may be given by the orthonormal basis (a list of
# vectors) of its outcome-1 subspace alone
Decoder = Options([MeasurementDocument, list[Amplitudes]])


@dataclass()
class SchemeDocument(Document):
    kind = Optional(str, default="qrac")
    name = Optional(str, default="")
    m = Required(int)
    n = Required(int)
    ancilla = Optional(int, default=0)
    weights = Optional(list[float])
    states = Required(dict[str, list[Amplitudes]])
    decoders = Required(list[Decoder])


@dataclass()
class CoveringCodeDocument(Document):
    m = Required(int)
    radius = Required(int)
    codewords = Required(list[str])


@dataclass()
class PadDocument(Document):
    permutation = Required(list[int])
    mask = Required(str)


@dataclass()
class PadFamilyDocument(Document):
    m = Required(int)
    ell = Optional(int)
    pads = Required(list[PadDocument])
