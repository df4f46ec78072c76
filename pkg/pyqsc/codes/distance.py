""" Minimum distance of cyclic codes.

Three strategies are available:

    - enumerating every nonzero message and encoding it,
    - searching, by increasing weight w, for w columns of the parity-check
      matrix that are linearly dependent,
    - the BCH bound read off the zeros of the generator polynomial.

The first two give exact values at any length, the last one only a lower
bound.
"""
import enum
import itertools
import logging
import math
from functools import reduce
from operator import xor
from typing import NamedTuple, Optional, Tuple, Union

import galois
import numpy as np

from .. import errors
from ..poly import reciprocal
from .cyclic import MATRIX_LENGTH_LIMIT, CyclicCode, matrix_rank, shift_matrix
from .sextic import splitting_context

logger = logging.getLogger(__name__)

#: Full enumeration is used up to this many messages
MESSAGE_ENUMERATION_LIMIT = 2 ** 26
#: Number of column subsets the support search may test
SUPPORT_SEARCH_LIMIT = 2_000_000
_CHUNK_SIZE = 2 ** 14


class DistanceMethod(enum.Enum):
    """Strategies of :func:`min_distance`"""

    Auto = 0
    """Pick the cheapest exact strategy, fall back to a bound"""
    Enumerate = 1
    """Encode every nonzero message"""
    Support = 2
    """Look for dependent columns of the parity-check matrix"""
    Bound = 3
    """BCH bound only"""

    @staticmethod
    def from_str(name: str) -> "DistanceMethod":
        try:
            return DistanceMethod[name.capitalize()]
        except KeyError:
            raise ValueError(f"Unknown distance method '{name}'") from None


class DistanceReport(NamedTuple):
    """Either the minimum distance (exact) or a lower bound on it"""

    value: int
    exact: bool
    method: DistanceMethod

    def to_json(self) -> Union[int, dict]:
        return self.value if self.exact else {"d_lower": self.value}

    def __str__(self) -> str:
        return str(self.value) if self.exact else f">={self.value}"


def defining_set(code: CyclicCode) -> Tuple[int, ...]:
    """Exponents j in [0, n) such that eta^j is a root of the generator"""
    return splitting_context(code.n, code.field).zeros(code.generator)


def bch_bound(code: CyclicCode) -> int:
    """1 + the longest run of zeros eta^(a + ib), i < run, over all steps b
    coprime to n

    >>> from pyqsc.field import make_prime_field
    >>> from pyqsc.poly import Poly
    >>> from pyqsc.codes.cyclic import code_from_generator
    >>> F = make_prime_field(2)
    >>> bch_bound(code_from_generator(7, F, Poly(F, [1, 1, 0, 1])))
    3
    """
    n = code.n
    try:
        zeros = set(defining_set(code))
    except errors.PyqscError as e:
        logger.warning("No BCH bound for %r: %s", code, e)
        return 1
    if not zeros:
        return 1
    longest = 0
    for step in range(1, n):
        if math.gcd(step, n) != 1:
            continue
        for start in zeros:
            run = 0
            while run < n and (start + run * step) % n in zeros:
                run += 1
            longest = max(longest, run)
    return min(longest, n) + 1


def _generator_rows(code: CyclicCode) -> galois.FieldArray:
    if code.n <= MATRIX_LENGTH_LIMIT:
        return code.generator_matrix
    return shift_matrix(code.field, code.generator, code.dimension, code.n)


def _parity_check_rows(code: CyclicCode) -> galois.FieldArray:
    if code.n <= MATRIX_LENGTH_LIMIT:
        return code.parity_check_matrix
    return shift_matrix(code.field, reciprocal(code.parity_check), code.redundancy, code.n)


def _enumerate(code: CyclicCode, stop_at: int = 1) -> int:
    q, k = code.q, code.dimension
    G = _generator_rows(code)
    total = q ** k
    place_values = q ** np.arange(k, dtype=np.int64)
    best = code.n
    for start in range(1, total, _CHUNK_SIZE):
        indices = np.arange(start, min(start + _CHUNK_SIZE, total), dtype=np.int64)
        digits = (indices[:, np.newaxis] // place_values) % q
        words = code.field.gf(digits) @ G
        weights = np.count_nonzero(words.view(np.ndarray), axis=1)
        best = min(best, int(weights.min()))
        if best <= stop_at:
            break
    return best


def _support_search(
    code: CyclicCode, max_weight: int, subset_limit: int
) -> Tuple[Optional[int], int]:
    """Returns (d, w) where d is the distance if found and w the largest
    weight for which every support was examined
    """
    H = _parity_check_rows(code)
    n = code.n
    tested = 0
    if code.q == 2:
        columns = [
            sum(int(H[i, j]) << i for i in range(H.shape[0])) for j in range(n)
        ]
    for w in range(1, max_weight + 1):
        count = math.comb(n, w)
        if tested + count > subset_limit:
            logger.info(
                "Support search of %r stopped before weight %d (%d subsets)",
                code,
                w,
                count,
            )
            return None, w - 1
        tested += count
        for support in itertools.combinations(range(n), w):
            if code.q == 2:
                if reduce(xor, (columns[j] for j in support)) == 0:
                    return w, w
            elif matrix_rank(H[:, list(support)]) < w:
                return w, w
    return None, max_weight


def min_distance(
    code: CyclicCode,
    budget: Optional[int] = None,
    method: DistanceMethod = DistanceMethod.Auto,
    enumeration_limit: int = MESSAGE_ENUMERATION_LIMIT,
    support_limit: int = SUPPORT_SEARCH_LIMIT,
) -> DistanceReport:
    """Minimum distance of a code of dimension >= 1.

    Parameters
    ----------
    code: CyclicCode
        the code
    budget: int, optional
        largest weight the support search looks at. Past it, Auto still
        enumerates when the messages fit, otherwise the result is a bound
    method: DistanceMethod
        strategy to use, Auto picks one from the size of the code
    enumeration_limit: int
        largest number of messages to enumerate
    support_limit: int
        largest number of column subsets to test

    Returns
    -------
    DistanceReport
        exact value or lower bound, with the strategy that produced it
    """
    if code.dimension < 1:
        raise ValueError("the zero code has no minimum distance")
    singleton = code.n - code.dimension + 1
    max_weight = singleton if budget is None else min(budget, singleton)

    if method == DistanceMethod.Bound:
        return DistanceReport(bch_bound(code), False, DistanceMethod.Bound)

    messages = code.q ** code.dimension
    if method == DistanceMethod.Enumerate:
        if messages > enumeration_limit:
            raise errors.TooLarge(f"{messages} messages to enumerate for {code!r}")
        return DistanceReport(_enumerate(code), True, DistanceMethod.Enumerate)

    if method == DistanceMethod.Support:
        found, exhausted = _support_search(code, max_weight, support_limit)
        if found is not None:
            return DistanceReport(found, True, DistanceMethod.Support)
        return DistanceReport(exhausted + 1, False, DistanceMethod.Support)

    if messages <= enumeration_limit and code.dimension <= code.n - code.dimension:
        logger.debug("Enumerating %d messages of %r", messages, code)
        return DistanceReport(_enumerate(code), True, DistanceMethod.Enumerate)

    found, exhausted = _support_search(code, max_weight, support_limit)
    if found is not None:
        return DistanceReport(found, True, DistanceMethod.Support)
    if messages <= enumeration_limit:
        return DistanceReport(_enumerate(code), True, DistanceMethod.Enumerate)

    bound = max(exhausted + 1, bch_bound(code))
    logger.warning("Minimum distance of %r is only bounded: d >= %d", code, bound)
    return DistanceReport(bound, False, DistanceMethod.Auto)
