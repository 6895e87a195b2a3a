from math import floor, log2

import numpy as np

from qrac_lab.crac.entropy import binary_entropy
from qrac_lab.errors import InfeasibleParametersError
from qrac_lab.model import CoveringCode
from qrac_lab.utils.bits import hamming_weights, to_int, to_string
from qrac_lab.utils.config import setting
from qrac_lab.utils.logging import get_logger

# rows of (newly covered string, ball offset) pairs handled per update
UPDATE_CHUNK = 1 << 20


def hamming_distance(x: str, y: str) -> int:
    if len(x) != len(y):
        raise ValueError(f"strings of different length: {x!r}, {y!r}")
    return sum(a != b for a, b in zip(x, y))


def ball_offsets(m: int, radius: int) -> np.ndarray:
    values = np.arange(2 ** m, dtype=np.int64)
    return values[hamming_weights(values) <= radius]


def greedy_covering_code(m: int, radius: int) -> CoveringCode:
    """Greedy set cover of {0,1}^m by Hamming balls of the given radius.

    Each round adds the center whose ball holds the most uncovered
    strings, the numerically smallest one on ties.
    """
    limit = setting("guards", "max_covering_bits", int)
    if m > limit:
        raise InfeasibleParametersError(
            f"covering codes are built for m <= {limit}, got m={m}"
        )
    if not 0 <= radius <= m:
        raise InfeasibleParametersError(f"radius must be in [0, {m}], got {radius}")

    offsets = ball_offsets(m, radius)
    uncovered = np.ones(2 ** m, dtype=bool)
    gains = np.full(2 ** m, offsets.size, dtype=np.int64)
    centers = []
    chunk = max(1, UPDATE_CHUNK // offsets.size)
    while uncovered.any():
        center = int(np.argmax(gains))
        ball = center ^ offsets
        newly = ball[uncovered[ball]]
        uncovered[newly] = False
        centers.append(center)
        # every center whose ball contains a newly covered string loses it
        for start in range(0, newly.size, chunk):
            block = newly[start:start + chunk]
            np.subtract.at(gains, (block[:, None] ^ offsets[None, :]).reshape(-1), 1)

    get_logger(__name__).info(
        f"greedy covering code m={m} radius={radius}: {len(centers)} codewords"
    )
    return CoveringCode(m, radius, tuple(to_string(c, m) for c in centers))


def closest_codeword(code: CoveringCode, x: str) -> str:
    """Nearest codeword, the numerically smallest one on ties"""
    if len(x) != code.m:
        raise ValueError(f"{x!r} is not an {code.m}-bit string")
    distances = hamming_weights(code.values ^ to_int(x))
    return code.codewords[int(np.argmin(distances))]


def nearest_codeword_table(code: CoveringCode) -> np.ndarray:
    """Index of the nearest codeword for every m-bit string"""
    strings = np.arange(2 ** code.m, dtype=np.int64)
    best = np.full(strings.size, code.m + 1, dtype=np.int64)
    nearest = np.zeros(strings.size, dtype=np.int64)
    for index, value in enumerate(code.values):
        distance = hamming_weights(strings ^ value)
        closer = distance < best
        best[closer] = distance[closer]
        nearest[closer] = index
    return nearest


def covering_radius_for(m: int, p: float) -> int:
    """floor((1 - p - 1/m) m) clamped to [0, m]"""
    return min(m, max(0, floor(m * (1.0 - p) - 1.0 + 1e-9)))


def existential_code_size_bound(m: int, p: float) -> float:
    """2^((1 - H(p + 1/m)) m + 2 log m), the size a covering code of radius
    (1 - p - 1/m) m is known to reach"""
    q = min(1.0, p + 1.0 / m)
    return 2.0 ** ((1.0 - binary_entropy(q)) * m + 2.0 * log2(m))
