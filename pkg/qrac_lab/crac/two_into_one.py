"""Two bits into one classical bit cannot beat a coin flip.

A one-bit code is described by two points of the unit square: P^b holds
the probabilities that decoder 0 and decoder 1 answer 1 when the stored
bit is b. Randomizing the encoder moves P^x along the segment from P^0 to
P^1, and both bits of x decode with probability above 1/2 exactly when
P^x lies in the open quarter of the square belonging to x. The segment
always misses at least one quarter, so some x succeeds with at most 1/2.
All arithmetic is exact.
"""
from fractions import Fraction
from itertools import product
from typing import Dict, FrozenSet, Tuple

from qrac_lab.constants import Quadrant
from qrac_lab.model import DecoderPointPair
from qrac_lab.utils.bits import all_strings
from qrac_lab.utils.config import setting
from qrac_lab.utils.logging import get_logger

HALF = Fraction(1, 2)


def _agreement(pp: DecoderPointPair, x: str, i: int, bit: int) -> Fraction:
    """Probability that decoder i answers x_i when the stored bit is bit"""
    answer_one = pp.point(bit)[i]
    return answer_one if x[i] == "1" else 1 - answer_one


def best_response_value(pp: DecoderPointPair, x: str) -> Tuple[Fraction, Fraction]:
    """max over the encoding probability q = Pr[store 1 | x] of the
    smaller of the two bit successes, and the maximizing q"""
    lines = [
        (_agreement(pp, x, i, 0), _agreement(pp, x, i, 1)) for i in range(2)
    ]

    def value(q: Fraction) -> Fraction:
        return min((1 - q) * a0 + q * a1 for a0, a1 in lines)

    candidates = [Fraction(0), Fraction(1)]
    (a0, a1), (b0, b1) = lines
    slope = (a1 - a0) - (b1 - b0)
    if slope != 0:
        crossing = (b0 - a0) / slope
        if 0 <= crossing <= 1:
            candidates.append(crossing)
    best = max(candidates, key=lambda q: (value(q), -q))
    return value(best), best


def strategy_value(pp: DecoderPointPair) -> Fraction:
    """min over x of the best-response success"""
    return min(best_response_value(pp, x)[0] for x in all_strings(2))


def pure_strategy_values() -> Dict[Tuple[str, str], Fraction]:
    """min over (x, i) success of every deterministic strategy.

    Keys are the encoder as the stored bit for 00, 01, 10, 11 and the
    decoder pair as the answers (V_0(0), V_0(1), V_1(0), V_1(1)).
    """
    values = {}
    for encoder in all_strings(4):
        for decoder in all_strings(4):
            successes = [
                Fraction(int(decoder[2 * i + int(encoder[k])] == x[i]))
                for k, x in enumerate(all_strings(2)) for i in range(2)
            ]
            values[(encoder, decoder)] = min(successes)
    return values


def best_two_into_one(denominator: int = None) -> Tuple[Fraction, Dict]:
    """Optimum of the 2 -> 1 classical game over decoder points on the
    rational grid with the given denominator, every encoder answering
    with its exact best response.

    The grid search is a witness, not the proof: the value 1/2 is
    certified for every pair of points by quarter_miss, which finds an
    open quarter the segment P^0 P^1 never enters. The game has private
    randomness only; mixing over shared strategies would reach 3/4.

    :return: the optimum (exactly 1/2) and the constant-guess witness
        that attains it
    """
    denominator = setting("two_into_one", "grid_denominator", int, denominator)
    grid = [Fraction(k, denominator) for k in range(denominator + 1)]
    optimum = None
    for a, b, c, d in product(grid, repeat=4):
        value = strategy_value(DecoderPointPair((a, b), (c, d)))
        if optimum is None or value > optimum:
            optimum = value

    witness = DecoderPointPair((HALF, HALF), (HALF, HALF))
    witness_value = strategy_value(witness)
    get_logger(__name__).info(
        f"2 -> 1 classical optimum over {len(grid) ** 4} decoder pairs: {optimum}"
    )
    return optimum, {
        "decoder_points": witness,
        "encoder": {x: best_response_value(witness, x)[1] for x in all_strings(2)},
        "value": witness_value,
        "missed_quarters": sorted(q.value for q in quarter_miss(witness))
    }


def _open_interval(start: Fraction, direction: Fraction, low: Fraction, high: Fraction):
    """Parameters s with low < start + s direction < high, as (lower,
    upper) with None for unbounded, or False when empty"""
    if direction == 0:
        return (None, None) if low < start < high else False
    first = (low - start) / direction
    second = (high - start) / direction
    return (min(first, second), max(first, second))


def quarter_miss(pp: DecoderPointPair) -> FrozenSet[Quadrant]:
    """Open quarters of the unit square the closed segment P^0 P^1 does
    not enter"""
    (x0, y0), (x1, y1) = pp.p0, pp.p1
    missed = set()
    for quadrant in Quadrant:
        (x_low, x_high), (y_low, y_high) = quadrant.bounds
        intervals = (
            _open_interval(x0, x1 - x0, x_low, x_high),
            _open_interval(y0, y1 - y0, y_low, y_high),
        )
        if any(interval is False for interval in intervals):
            missed.add(quadrant)
            continue
        lows = [low for low, _ in intervals if low is not None]
        highs = [high for _, high in intervals if high is not None]
        lower = max(lows) if lows else None
        upper = min(highs) if highs else None
        # (lower, upper) meets the closed parameter range [0, 1]
        hits = (
            (lower is None or upper is None or lower < upper)
            and (lower is None or lower < 1)
            and (upper is None or upper > 0)
        )
        if not hits:
            missed.add(quadrant)
    return frozenset(missed)
