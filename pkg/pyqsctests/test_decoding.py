import numpy as np
import pytest

from pyqsc import errors
from pyqsc.codes import bounded_distance_decode


def _random_error(rng, n, q, weight):
    error = np.zeros(n, dtype=np.int64)
    positions = rng.choice(n, size=weight, replace=False)
    error[positions] = rng.integers(1, q, size=weight)
    return error


def test_corrects_up_to_two_errors(code_31_21_5):
    code = code_31_21_5
    F = code.field.gf
    rng = np.random.default_rng(1234)
    for _ in range(200):
        codeword = F(code.encode(rng.integers(0, 2, size=code.dimension)))
        error = F(_random_error(rng, code.n, code.q, int(rng.integers(0, 3))))
        decoded, found = bounded_distance_decode(code, codeword + error, 2)
        assert np.array_equal(decoded, codeword)
        assert np.array_equal(found, error)


def test_three_errors_are_not_corrected(code_31_21_5):
    code = code_31_21_5
    F = code.field.gf
    rng = np.random.default_rng(99)
    codeword = F(code.encode(rng.integers(0, 2, size=code.dimension)))
    received = codeword + F(_random_error(rng, code.n, code.q, 3))
    try:
        decoded, _ = bounded_distance_decode(code, received, 2)
    except errors.NoCodewordInBall:
        return
    assert not np.array_equal(decoded, codeword)


def test_codeword_is_returned_unchanged(hamming):
    word = hamming.encode([1, 1, 0, 1])
    decoded, error = bounded_distance_decode(hamming, word, 1)
    assert decoded.tolist() == word.tolist()
    assert not np.any(error)


def test_nonbinary(ctx_19_7):
    # the zeros 1, 2, 3 give d >= 4
    code = ctx_19_7.gens.code((0, 1))
    F = code.field.gf
    codeword = F(code.encode([3, 1, 4, 1, 5, 6, 2, 6, 5, 3, 5, 0, 1]))
    error = F.Zeros(code.n)
    error[7] = 4
    decoded, found = bounded_distance_decode(code, codeword + error, 1)
    assert np.array_equal(decoded, codeword)
    assert np.array_equal(found, error)


def test_no_codeword_in_ball(hamming):
    with pytest.raises(errors.NoCodewordInBall):
        bounded_distance_decode(hamming, [1, 0, 0, 0, 0, 0, 0], 0)


def test_errors(hamming, ctx_43_4):
    with pytest.raises(errors.LengthMismatch):
        bounded_distance_decode(hamming, [0, 1], 1)
    with pytest.raises(ValueError):
        bounded_distance_decode(hamming, [0] * 7, -1)
    with pytest.raises(errors.TooLarge):
        bounded_distance_decode(ctx_43_4.gens.code((0,)), [0] * 43, 1)
