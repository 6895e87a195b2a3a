from itertools import product
from typing import List

import numpy as np


def all_strings(m: int) -> List[str]:
    """All m-bit strings in increasing numeric order"""
    return ["".join(bits) for bits in product("01", repeat=m)]


def to_string(value: int, width: int) -> str:
    if width == 0:
        return ""
    return format(value, f"0{width}b")


def to_int(bits: str) -> int:
    return int(bits, 2) if bits else 0


def xor(x: str, y: str) -> str:
    return "".join("1" if a != b else "0" for a, b in zip(x, y))


def hamming_weights(values: np.ndarray) -> np.ndarray:
    return np.bitwise_count(values.astype(np.uint64)).astype(np.int64)


def bit_matrix(m: int) -> np.ndarray:
    """(2^m, m) matrix whose row j holds the bits of j, most significant
    first"""
    values = np.arange(2 ** m, dtype=np.int64)
    shifts = np.arange(m - 1, -1, -1, dtype=np.int64)
    return ((values[:, None] >> shifts[None, :]) & 1).astype(np.uint8)


def rows_to_ints(rows: np.ndarray) -> np.ndarray:
    m = rows.shape[1]
    weights = (1 << np.arange(m - 1, -1, -1, dtype=np.int64))
    return rows.astype(np.int64) @ weights
