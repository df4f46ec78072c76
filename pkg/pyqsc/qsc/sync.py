""" Classical simulation of block synchronization recovery.

A message v gives the word u = v f g1 + g1 of the outer code; a misalignment
by delta positions turns it into x^delta u mod (x^n - 1). Dividing by g1 and
reducing modulo f leaves x^delta mod f, which identifies delta within the
tolerance window.
"""
import logging
from typing import List, NamedTuple, Optional, Tuple, Union

import numpy as np

from .. import errors
from ..poly import Poly
from ..typehints import Word
from .chain import QscChain, qsc_params

logger = logging.getLogger(__name__)


class SyncTrial(NamedTuple):
    message: Tuple[int, ...]
    true_shift: int
    transmitted: Tuple[int, ...]
    recovered_shift: Optional[int]
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.error is None and self.recovered_shift == self.true_shift


def encode_shadow(chain: QscChain, v: Union[Poly, Word]) -> np.ndarray:
    """Word of v(x) f(x) g1(x) + g1(x), a codeword of the outer code"""
    if not isinstance(v, Poly):
        v = Poly.from_word(chain.field, v)
    elif v.field != chain.field:
        raise errors.FieldMismatch(f"message over {v.field!r}, chain over {chain.field!r}")
    if v.degree >= chain.k2:
        raise errors.DegreeTooHigh(f"deg v = {v.degree} is not below k2 = {chain.k2}")
    u = v * chain.f * chain.g1 + chain.g1
    return u.to_word(chain.n)


def apply_shift(word: Word, delta: int) -> np.ndarray:
    """Coefficients of x^delta u(x) mod (x^n - 1)

    >>> apply_shift([1, 2, 3, 4], 1).tolist()
    [4, 1, 2, 3]
    >>> apply_shift([1, 2, 3, 4], -1).tolist()
    [2, 3, 4, 1]
    """
    word = np.asarray(word)
    return np.roll(word, delta % len(word))


def recover_shift(chain: QscChain, received: Word, c_l: int, c_r: int) -> int:
    """Returns the j with -c_l < j < c_r and x^j = (received / g1) mod f"""
    qsc_params(chain, c_l, c_r)
    word = np.asarray(received)
    if word.shape != (chain.n,):
        raise errors.LengthMismatch(f"received word of shape {word.shape}, expected ({chain.n},)")
    quotient, remainder = divmod(Poly.from_word(chain.field, word), chain.g1)
    if not remainder.is_zero:
        raise errors.NotInOuterCode("the received word is not a multiple of g1")
    residue = quotient % chain.f
    try:
        return chain.shift_table(c_l, c_r)[residue.coeffs]
    except KeyError:
        raise errors.NoMatchingShift(
            f"no shift in ({-c_l}, {c_r}) matches the received word"
        ) from None


def run_sync_trials(
    chain: QscChain, delta: int, c_l: int, c_r: int, trials: int, seed: int = 0
) -> List[SyncTrial]:
    """Encodes `trials` random messages, shifts them by delta and recovers
    the shift. The messages come from a generator seeded with `seed`.
    """
    if trials < 0:
        raise ValueError(f"trials must be nonnegative, not {trials}")
    if seed < 0:
        raise ValueError(f"seed must be nonnegative, not {seed}")
    qsc_params(chain, c_l, c_r)
    if not -chain.n < delta < chain.n:
        raise ValueError(f"delta={delta} is not in ({-chain.n}, {chain.n})")
    rng = np.random.default_rng(seed)
    results = []
    for _ in range(trials):
        message = rng.integers(0, chain.q, size=chain.k2)
        transmitted = apply_shift(encode_shadow(chain, message), delta)
        try:
            recovered, error = recover_shift(chain, transmitted, c_l, c_r), None
        except errors.NoMatchingShift as e:
            recovered, error = None, f"{type(e).__name__}: {e}"
        results.append(
            SyncTrial(
                message=tuple(int(c) for c in message),
                true_shift=delta,
                transmitted=tuple(int(c) for c in transmitted),
                recovered_shift=recovered,
                error=error,
            )
        )
    failures = sum(not trial.ok for trial in results)
    if failures:
        logger.info("%d of %d trials did not recover the shift %d", failures, trials, delta)
    return results
