""" Bounded-distance decoding by syndrome matching, for short codes
"""
import itertools
import logging
import math
from typing import Tuple

import galois
import numpy as np

from .. import errors
from ..typehints import Word
from .cyclic import CyclicCode

logger = logging.getLogger(__name__)

#: Longest code the decoder accepts
DECODER_LENGTH_LIMIT = 40


def _error_patterns(code: CyclicCode, weight: int) -> np.ndarray:
    """Every error vector of exactly `weight` nonzero symbols"""
    n, q = code.n, code.q
    supports = list(itertools.combinations(range(n), weight))
    values = np.array(list(itertools.product(range(1, q), repeat=weight)), dtype=np.int64)
    patterns = np.zeros((len(supports) * len(values), n), dtype=np.int64)
    rows = np.arange(len(values))
    for i, support in enumerate(supports):
        block = patterns[i * len(values) : (i + 1) * len(values)]
        for position, column in zip(support, values.T):
            block[rows, position] = column
    return patterns


def bounded_distance_decode(
    code: CyclicCode, received: Word, t: int
) -> Tuple[galois.FieldArray, galois.FieldArray]:
    """Returns (codeword, error) with error of weight at most t and
    codeword + error = received.

    Error patterns are tried by increasing weight, the first one whose
    syndrome matches the received word's is returned.
    """
    if code.n > DECODER_LENGTH_LIMIT:
        raise errors.TooLarge(f"decoding is limited to n <= {DECODER_LENGTH_LIMIT}")
    if t < 0:
        raise ValueError(f"t must be nonnegative, not {t}")
    received = code.field.gf(np.asarray(received, dtype=np.int64))
    if received.shape != (code.n,):
        raise errors.LengthMismatch(f"received word of length {received.shape}, expected {code.n}")

    H = code.parity_check_matrix
    syndrome = H @ received
    if not np.any(syndrome):
        return received, code.field.gf.Zeros(code.n)

    for weight in range(1, t + 1):
        count = math.comb(code.n, weight) * (code.q - 1) ** weight
        logger.debug("Trying %d error patterns of weight %d", count, weight)
        patterns = code.field.gf(_error_patterns(code, weight))
        syndromes = patterns @ H.T
        matches = np.flatnonzero(np.all(syndromes == syndrome, axis=1))
        if matches.size:
            error = patterns[matches[0]]
            return received - error, error
    raise errors.NoCodewordInBall(f"no codeword within distance {t} of the received word")
