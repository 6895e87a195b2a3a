from dataclasses import dataclass
from typing import Tuple

FEASIBLE = "FEASIBLE"
INFEASIBLE = "INFEASIBLE"


@dataclass(frozen=True)
class BoundReport():
    """Numeric chain from an (m, n, p) code to a lower bound on n

    :kind: "quantum" or "serial"
    :epsilon: target per-bit error after amplification
    :copies: number of copies t the amplification needs
    :extraction_success: lower bound on recovering the whole string
    :information: bits of information the recovered string must carry
    :chain_min_n: the chain evaluated at m alone
    :implied_min_n: maximum of the chain over all m' <= m
    """
    kind :str
    m :int
    n :int
    p :float
    epsilon :float
    copies :int
    extraction_success :float
    information :float
    chain_min_n :int
    implied_min_n :int
    status :str
    notes :Tuple[str, ...] = ()

    def to_dict(self):
        return {
            "kind": self.kind,
            "m": self.m,
            "n": self.n,
            "p": self.p,
            "epsilon": self.epsilon,
            "copies": self.copies,
            "extraction_success": self.extraction_success,
            "information": self.information,
            "chain_min_n": self.chain_min_n,
            "implied_min_n": self.implied_min_n,
            "status": self.status,
            "notes": list(self.notes)
        }
