from math import ceil, log, log2, sqrt
from typing import Dict, Tuple

import numpy as np

from qrac_lab.crac.covering import (
    closest_codeword,
    covering_radius_for,
    greedy_covering_code,
    nearest_codeword_table,
)
from qrac_lab.crac.entropy import binary_entropy
from qrac_lab.errors import InfeasibleParametersError, VerificationError
from qrac_lab.model import (
    ClassicalRacScheme,
    CoveringCode,
    Pad,
    PadFamily,
    PadFamilyBuild,
    SuccessTable,
)
from qrac_lab.utils.bits import all_strings, bit_matrix, rows_to_ints, to_int, to_string, xor
from qrac_lab.utils.config import setting
from qrac_lab.utils.logging import get_logger


def _permute(bits: str, permutation: Tuple[int, ...]) -> str:
    return "".join(bits[k] for k in permutation)


def _unpermute(bits: str, permutation: Tuple[int, ...]) -> str:
    result = [""] * len(bits)
    for k, position in enumerate(permutation):
        result[position] = bits[k]
    return "".join(result)


def pad_encode(code: CoveringCode, pad: Pad, x: str) -> str:
    """pi^-1(S(pi(x xor r))) xor r"""
    if len(x) != code.m:
        raise ValueError(f"{x!r} is not an {code.m}-bit string")
    shifted = _permute(xor(x, pad.mask), pad.permutation)
    return xor(_unpermute(closest_codeword(code, shifted), pad.permutation), pad.mask)


def pad_decode(code: CoveringCode, pad: Pad, codeword_index: int) -> str:
    """The string y a stored (pad, codeword) pair stands for"""
    return xor(_unpermute(code.codewords[codeword_index], pad.permutation), pad.mask)


def identity_pad(m: int) -> Pad:
    return Pad(tuple(range(m)), "0" * m)


def family_success(family: PadFamily, code: CoveringCode) -> np.ndarray:
    """(2^m, m) fraction of pads whose encoding keeps bit i of x"""
    m = family.m
    strings = bit_matrix(m)
    nearest = nearest_codeword_table(code)
    codeword_bits = bit_matrix(m)[code.values]
    agreement = np.zeros(strings.shape, dtype=np.int64)
    for pad in family.pads:
        permutation = np.array(pad.permutation)
        mask = np.array([int(bit) for bit in pad.mask], dtype=np.uint8)
        shifted = (strings ^ mask)[:, permutation]
        chosen = codeword_bits[nearest[rows_to_ints(shifted)]]
        unpermuted = np.empty_like(chosen)
        unpermuted[:, permutation] = chosen
        agreement += (unpermuted ^ mask) == strings
    return agreement / family.ell


def _table(m: int, success: np.ndarray) -> SuccessTable:
    return SuccessTable(
        m,
        {
            (x, i): float(success[k, i])
            for k, x in enumerate(all_strings(m)) for i in range(m)
        }
    )


def _sample_family(m: int, ell: int, rng: np.random.Generator) -> PadFamily:
    permutations = [rng.permutation(m) for _ in range(ell)]
    masks = rng.integers(0, 2, size=(ell, m))
    return PadFamily(
        m,
        tuple(
            Pad(tuple(int(k) for k in permutation), "".join(str(int(b)) for b in mask))
            for permutation, mask in zip(permutations, masks)
        )
    )


def build_pad_family(
        m: int,
        p: float,
        target_ell: int = None,
        seed: int = 0,
        retry_cap: int = None
    ) -> PadFamilyBuild:
    """Samples pad families from default_rng(seed) until one keeps every
    bit of every string with frequency at least p.

    For p > 1 - 1/m no compression is possible beyond the trivial code, so
    the identity code with a single identity pad is returned.

    :raises InfeasibleParametersError: m above guards.max_verification_bits
        or p outside [0, 1]
    :raises VerificationError: no family verified within retry_cap samples
    """
    limit = setting("guards", "max_verification_bits", int)
    if m > limit:
        raise InfeasibleParametersError(
            f"pad families are verified exhaustively for m <= {limit}, got m={m}"
        )
    if not 0.0 <= p <= 1.0:
        raise InfeasibleParametersError(f"p must be in [0, 1], got {p}")
    logger = get_logger(__name__)

    if p > 1.0 - 1.0 / m:
        logger.warning(
            f"p={p} > 1 - 1/m: falling back to the identity encoding"
        )
        code = CoveringCode(m, 0, tuple(all_strings(m)))
        family = PadFamily(m, (identity_pad(m),))
        return PadFamilyBuild(
            family=family,
            code=code,
            table=_table(m, family_success(family, code)),
            attempts=1,
            deviation_bound=sqrt(log(2 * m * 2 ** m) / 2.0),
            spread=0.0
        )

    ell = setting("crac", "default_ell", int, target_ell)
    retry_cap = setting("crac", "retry_cap", int, retry_cap)
    code = greedy_covering_code(m, covering_radius_for(m, p))
    rng = np.random.default_rng(seed)
    best = -1.0
    for attempt in range(1, retry_cap + 1):
        family = _sample_family(m, ell, rng)
        success = family_success(family, code)
        current = float(success.min())
        best = max(best, current)
        logger.debug(f"attempt {attempt}: min success {current:.6f}")
        if current >= p - 1e-12:
            logger.info(
                f"verified pad family m={m} p={p} ell={ell} after {attempt} attempt(s)"
            )
            return PadFamilyBuild(
                family=family,
                code=code,
                table=_table(m, success),
                attempts=attempt,
                deviation_bound=sqrt(log(2 * m * 2 ** m) / (2.0 * ell)),
                spread=float((success.max(axis=1) - success.min(axis=1)).max())
            )
    raise VerificationError(
        f"no pad family with min success >= {p} within {retry_cap} attempts "
        f"(best min success {best:.6f})"
    )


def _field_widths(family: PadFamily, code: CoveringCode) -> Tuple[int, int]:
    return ceil(log2(family.ell)), ceil(log2(code.size))


def pad_scheme(family: PadFamily, code: CoveringCode) -> ClassicalRacScheme:
    """Stores (j, index of the codeword) for a uniformly random pad j; bit i
    is read off the reconstructed string. Codewords that name no pad or no
    codeword decode to 0."""
    pad_bits, code_bits = _field_widths(family, code)
    index = {word: k for k, word in enumerate(code.codewords)}

    encodings = {}
    for x in all_strings(family.m):
        entries = []
        for j, pad in enumerate(family.pads):
            shifted = _permute(xor(x, pad.mask), pad.permutation)
            entries.append(
                to_string(j, pad_bits) + to_string(index[closest_codeword(code, shifted)], code_bits)
            )
        encodings[x] = tuple(entries)

    decoded: Dict[str, str] = {}
    for y in all_strings(pad_bits + code_bits):
        j, k = to_int(y[:pad_bits]), to_int(y[pad_bits:])
        if j < family.ell and k < code.size:
            decoded[y] = pad_decode(code, family.pads[j], k)
        else:
            decoded[y] = "0" * family.m

    return ClassicalRacScheme(
        m=family.m,
        n=pad_bits + code_bits,
        weights=(1.0 / family.ell,) * family.ell,
        encodings=encodings,
        decoder_weights=(1.0,),
        decoders=tuple(
            {y: (int(decoded[y][i]),) for y in decoded}
            for i in range(family.m)
        ),
        name=f"pads(m={family.m}, ell={family.ell}, |S|={code.size})"
    )


def identity_scheme(m: int) -> ClassicalRacScheme:
    """x stored verbatim; every bit decodes with certainty"""
    strings = all_strings(m)
    return ClassicalRacScheme(
        m=m,
        n=m,
        weights=(1.0,),
        encodings={x: (x,) for x in strings},
        decoder_weights=(1.0,),
        decoders=tuple({y: (int(y[i]),) for y in strings} for i in range(m)),
        name=f"identity{m}"
    )


def length_comparison(build: PadFamilyBuild, p: float) -> Dict[str, float]:
    """log2(ell |S|) against the (1 - H(p)) m lower bound and the
    (1 - H(p)) m + 7 log m upper bound"""
    m = build.family.m
    lower = (1.0 - binary_entropy(p)) * m
    return {
        "log_length": log2(build.family.ell * build.code.size),
        "lower_bound": lower,
        "upper_bound": lower + 7.0 * log2(m)
    }
