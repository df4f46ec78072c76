""" Cyclic codes given by their generator polynomial, their duals and the
relations between them.
"""
import functools
import logging
from typing import Iterable, Mapping, Union

import galois
import numpy as np

from .. import errors
from ..field import FieldCtx
from ..poly import Poly, reciprocal, x_n_minus_one
from ..typehints import Word

logger = logging.getLogger(__name__)

#: Generator and parity-check matrices are only built up to this length
MATRIX_LENGTH_LIMIT = 64


def shift_matrix(field: FieldCtx, poly: Poly, rows: int, n: int) -> galois.FieldArray:
    """rows x n matrix whose row i holds the coefficients of x^i poly(x)"""
    matrix = np.zeros((rows, n), dtype=np.int64)
    coeffs = poly.coeffs
    for i in range(rows):
        matrix[i, i : i + len(coeffs)] = coeffs
    return field.gf(matrix)


class CyclicCode:
    """The cyclic code of length n generated by a monic divisor g of x^n - 1.

    Use :func:`code_from_generator` to build one, it checks that g divides x^n - 1.

    >>> from pyqsc.field import make_prime_field
    >>> F = make_prime_field(2)
    >>> C = code_from_generator(7, F, Poly(F, [1, 1, 0, 1]))
    >>> C
    <CyclicCode([7,4]_2)>
    >>> C.parity_check.coeffs
    (1, 1, 1, 0, 1)
    """

    def __init__(self, n: int, field: FieldCtx, generator: Poly) -> None:
        self.n = n
        self.field = field
        self.generator = generator
        self.parity_check = x_n_minus_one(field, n) // generator

    @property
    def dimension(self) -> int:
        return self.n - self.generator.degree

    k = dimension

    @property
    def redundancy(self) -> int:
        return self.generator.degree

    @property
    def q(self) -> int:
        return self.field.order

    def _check_matrix_size(self) -> None:
        if self.n > MATRIX_LENGTH_LIMIT:
            raise errors.TooLarge(
                f"matrices are only built for n <= {MATRIX_LENGTH_LIMIT}, not {self.n}"
            )

    @functools.cached_property
    def generator_matrix(self) -> galois.FieldArray:
        """k x n matrix whose rows are the shifts x^i g(x), i < k"""
        self._check_matrix_size()
        return shift_matrix(self.field, self.generator, self.dimension, self.n)

    @functools.cached_property
    def parity_check_matrix(self) -> galois.FieldArray:
        """(n - k) x n matrix whose rows are the shifts of the reciprocal of h"""
        self._check_matrix_size()
        return shift_matrix(self.field, reciprocal(self.parity_check), self.redundancy, self.n)

    def encode(self, message: Union[Poly, Word]) -> np.ndarray:
        """Word of m(x) g(x) for a message of degree < k"""
        if not isinstance(message, Poly):
            message = Poly.from_word(self.field, message)
        if message.degree >= self.dimension:
            raise errors.DegreeTooHigh(
                f"message of degree {message.degree} for a code of dimension {self.dimension}"
            )
        return (message * self.generator).to_word(self.n)

    def __contains__(self, word: Word) -> bool:
        if len(word) != self.n:
            return False
        return (Poly.from_word(self.field, word) % self.generator).is_zero

    def __eq__(self, other) -> bool:
        if not isinstance(other, CyclicCode):
            return NotImplemented
        return (self.n, self.field, self.generator) == (
            other.n,
            other.field,
            other.generator,
        )

    def __hash__(self) -> int:
        return hash((self.n, self.field, self.generator))

    def __repr__(self) -> str:
        return f"<CyclicCode([{self.n},{self.dimension}]_{self.q})>"


def code_from_generator(n: int, field: FieldCtx, generator: Poly) -> CyclicCode:
    if generator.field != field:
        raise errors.FieldMismatch(f"generator over {generator.field!r}, code over {field!r}")
    if generator.is_zero:
        raise errors.NotADivisor("the zero polynomial does not generate a cyclic code")
    generator = generator.monic()
    if not (x_n_minus_one(field, n) % generator).is_zero:
        raise errors.NotADivisor(f"{generator} does not divide x^{n} - 1")
    return CyclicCode(n, field, generator)


def dual_code(code: CyclicCode) -> CyclicCode:
    """The dual code, generated by the reciprocal of the parity-check polynomial"""
    return CyclicCode(code.n, code.field, reciprocal(code.parity_check))


def matrix_rank(matrix: galois.FieldArray) -> int:
    if matrix.size == 0:
        return 0
    return int(np.linalg.matrix_rank(matrix))


def dual_oracle(code: CyclicCode) -> galois.FieldArray:
    """A basis of the orthogonal complement of the code, by elimination
    on its generator matrix
    """
    code._check_matrix_size()
    if code.dimension == 0:
        return code.field.gf.Identity(code.n)
    if code.dimension == code.n:
        return code.field.gf.Zeros((0, code.n))
    return code.generator_matrix.null_space()


def row_spaces_equal(a: galois.FieldArray, b: galois.FieldArray) -> bool:
    if a.shape[1] != b.shape[1]:
        return False
    rank_a = matrix_rank(a)
    if rank_a != matrix_rank(b):
        return False
    if a.shape[0] == 0 or b.shape[0] == 0:
        return True
    return matrix_rank(np.concatenate((a, b), axis=0)) == rank_a


def _check_compatible(a: CyclicCode, b: CyclicCode) -> None:
    if a.n != b.n or a.field != b.field:
        raise errors.LengthMismatch(f"{a!r} and {b!r} do not live in the same space")


def is_subcode(a: CyclicCode, b: CyclicCode) -> bool:
    """True when a is contained in b, that is when g_b divides g_a"""
    _check_compatible(a, b)
    return (a.generator % b.generator).is_zero


def is_dual_containing(code: CyclicCode) -> bool:
    return is_subcode(dual_code(code), code)


def augment(
    code: CyclicCode, minimal_polys: Mapping[int, Poly], drop: Iterable[int]
) -> CyclicCode:
    """The code generated by g / prod(M_s for s in drop)"""
    generator = code.generator
    for s in sorted(set(drop)):
        try:
            factor = minimal_polys[s]
        except KeyError:
            raise errors.NotAFactor(f"No minimal polynomial for {s}") from None
        quotient, remainder = divmod(generator, factor)
        if not remainder.is_zero:
            raise errors.NotAFactor(f"M_{s} = {factor} does not divide {generator}")
        generator = quotient
    if generator.degree == 0:
        raise errors.EmptyGenerator(f"dropping {sorted(set(drop))} leaves a constant generator")
    return CyclicCode(code.n, code.field, generator)
