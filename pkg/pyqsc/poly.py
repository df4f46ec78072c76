""" Dense univariate polynomials over a :class:`pyqsc.field.FieldCtx`.

:class:`Poly` keeps its coefficients as a tuple of integers (the integer
representation of field elements) in ascending degree order, trailing zeros
stripped; the arithmetic is delegated to :class:`galois.Poly`.
"""
import logging
import re
from typing import Iterable, Sequence, Tuple, Union

import galois
import numpy as np

from . import errors
from .field import FieldCtx
from .typehints import FieldElement

logger = logging.getLogger(__name__)


class _MinusInfinity:
    """Degree of the zero polynomial, smaller than every integer"""

    __slots__ = ()

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("-inf")

    def __repr__(self):
        return "-inf"


MINUS_INFINITY = _MinusInfinity()

Degree = Union[int, _MinusInfinity]
Scalar = Union[int, FieldElement]


class Poly:
    """A polynomial with coefficients in a finite field

    >>> from pyqsc.field import make_prime_field
    >>> F = make_prime_field(2)
    >>> a = Poly(F, [1, 1])
    >>> str(a * a)
    '1 + x^2'
    >>> Poly.zero(F).degree
    -inf
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldCtx, coeffs: Iterable[Scalar] = ()) -> None:
        values = [int(c) for c in coeffs]
        for c in values:
            if not 0 <= c < field.order:
                raise ValueError(f"{c} is not an element of GF({field.order})")
        while values and values[-1] == 0:
            values.pop()
        self.field = field
        self.coeffs: Tuple[int, ...] = tuple(values)

    @classmethod
    def zero(cls, field: FieldCtx) -> "Poly":
        return cls(field)

    @classmethod
    def one(cls, field: FieldCtx) -> "Poly":
        return cls(field, (1,))

    @classmethod
    def x(cls, field: FieldCtx) -> "Poly":
        return cls(field, (0, 1))

    @classmethod
    def monomial(cls, field: FieldCtx, degree: int, coefficient: Scalar = 1) -> "Poly":
        return cls(field, [0] * degree + [int(coefficient)])

    @classmethod
    def from_galois(cls, field: FieldCtx, poly: galois.Poly) -> "Poly":
        return cls(field, (int(c) for c in poly.coeffs[::-1]))

    @classmethod
    def from_word(cls, field: FieldCtx, word: Sequence[Scalar]) -> "Poly":
        """The polynomial sum(word[i] x^i)"""
        return cls(field, np.asarray(word).tolist())

    @classmethod
    def parse(cls, field: FieldCtx, text: str) -> "Poly":
        """Parses the text rendering of a polynomial.

        >>> from pyqsc.field import make_field
        >>> F = make_field(4)
        >>> p = Poly.parse(F, "[1,0] + [0,1]*x + x^3")
        >>> p.coeffs
        (1, 2, 0, 1)
        >>> str(p)
        '[1,0] + [0,1]*x + x^3'
        """
        return _parse(field, text)

    @property
    def degree(self) -> Degree:
        return len(self.coeffs) - 1 if self.coeffs else MINUS_INFINITY

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading_coefficient(self) -> FieldElement:
        return self.field.gf(self.coeffs[-1] if self.coeffs else 0)

    @property
    def constant_term(self) -> FieldElement:
        return self.field.gf(self.coeffs[0] if self.coeffs else 0)

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def to_galois(self) -> galois.Poly:
        return galois.Poly(list(self.coeffs) or [0], field=self.field.gf, order="asc")

    def to_word(self, n: int) -> np.ndarray:
        """Coefficients as a length n integer array"""
        if self.degree >= n:
            raise ValueError(f"polynomial of degree {self.degree} does not fit in {n} symbols")
        word = np.zeros(n, dtype=np.int64)
        word[: len(self.coeffs)] = self.coeffs
        return word

    def monic(self) -> "Poly":
        if self.is_zero or self.is_monic:
            return self
        return self.scale(self.leading_coefficient ** -1)

    def scale(self, c: Scalar) -> "Poly":
        if isinstance(c, galois.FieldArray):
            self._check_scalar(c)
        c = self.field.gf(int(c))
        return Poly(self.field, self.field.gf(list(self.coeffs) or [0]) * c)

    def _check_scalar(self, c: FieldElement) -> None:
        if type(c) is not self.field.gf:
            raise errors.FieldMismatch(f"scalar of {type(c).name} used with {self.field!r}")

    def _check_other(self, other: "Poly") -> None:
        if not isinstance(other, Poly):
            raise TypeError(f"expected a Poly, got {type(other).__name__}")
        if other.field != self.field:
            raise errors.FieldMismatch(
                f"polynomials over {self.field!r} and {other.field!r}"
            )

    def __add__(self, other: "Poly") -> "Poly":
        self._check_other(other)
        return Poly.from_galois(self.field, self.to_galois() + other.to_galois())

    def __sub__(self, other: "Poly") -> "Poly":
        self._check_other(other)
        return Poly.from_galois(self.field, self.to_galois() - other.to_galois())

    def __neg__(self) -> "Poly":
        return Poly.from_galois(self.field, -self.to_galois())

    def __mul__(self, other: Union["Poly", Scalar]) -> "Poly":
        if not isinstance(other, Poly):
            return self.scale(other)
        self._check_other(other)
        return Poly.from_galois(self.field, self.to_galois() * other.to_galois())

    __rmul__ = __mul__

    def __divmod__(self, other: "Poly") -> Tuple["Poly", "Poly"]:
        self._check_other(other)
        if other.is_zero:
            raise errors.DivisionByZero("polynomial division by zero")
        quotient, remainder = divmod(self.to_galois(), other.to_galois())
        return (
            Poly.from_galois(self.field, quotient),
            Poly.from_galois(self.field, remainder),
        )

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise ValueError("negative powers of polynomials are not defined")
        return Poly.from_galois(self.field, self.to_galois() ** exponent)

    def __call__(self, at: Scalar) -> FieldElement:
        """Evaluates the polynomial at an element of its field

        >>> from pyqsc.field import make_prime_field
        >>> int(Poly(make_prime_field(7), [1, 0, 0, 1])(2))
        2
        """
        if isinstance(at, galois.FieldArray):
            self._check_scalar(at)
        else:
            at = self.field.gf(int(at))
        return self.to_galois()(at)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __bool__(self) -> bool:
        return not self.is_zero

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            coefficient = self._format_coefficient(c)
            if i == 0:
                terms.append(coefficient)
                continue
            monomial = "x" if i == 1 else f"x^{i}"
            terms.append(monomial if c == 1 else f"{coefficient}*{monomial}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"<Poly({self}) over GF({self.field.order})>"

    def _format_coefficient(self, c: int) -> str:
        if self.field.m == 1:
            return str(c)
        return "[" + ",".join(str(v) for v in self.field.vector(c)) + "]"


_TERM = re.compile(
    r"""^(?:(?P<coefficient>\d+|\[[\d\s,]*\])\s*(?:\*\s*)?)?
         (?P<variable>x(?:\s*\^\s*(?P<exponent>\d+))?)?$""",
    re.VERBOSE,
)


def _parse_coefficient(field: FieldCtx, text: str, source: str) -> int:
    if text.startswith("["):
        try:
            vector = [int(v) for v in text[1:-1].split(",")]
            return int(field.element(vector))
        except ValueError:
            raise errors.PolyParseError(
                f"'{text}' is not a coefficient of GF({field.order}) in '{source}'"
            ) from None
    if field.m != 1:
        raise errors.PolyParseError(
            f"coefficients of GF({field.order}) are written as [c0,...,c{field.m - 1}], got '{text}'"
        )
    value = int(text)
    if value >= field.order:
        raise errors.PolyParseError(f"{value} is not an element of GF({field.order})")
    return value


def _parse(field: FieldCtx, text: str) -> Poly:
    if text.strip() == "0":
        return Poly.zero(field)
    total = {}
    for raw_term in text.split("+"):
        term = raw_term.strip()
        match = _TERM.match(term)
        if not term or match is None:
            raise errors.PolyParseError(f"Cannot parse term '{raw_term}' of '{text}'")
        if match["coefficient"] is None and match["variable"] is None:
            raise errors.PolyParseError(f"Empty term in '{text}'")
        coefficient = 1
        if match["coefficient"] is not None:
            coefficient = _parse_coefficient(field, match["coefficient"], text)
        exponent = 0
        if match["variable"] is not None:
            exponent = int(match["exponent"]) if match["exponent"] is not None else 1
        previous = total.get(exponent, 0)
        total[exponent] = int(field.gf(previous) + field.gf(coefficient))
    coeffs = [0] * (max(total) + 1)
    for exponent, coefficient in total.items():
        coeffs[exponent] = coefficient
    return Poly(field, coeffs)


def x_n_minus_one(field: FieldCtx, n: int) -> Poly:
    """
    >>> from pyqsc.field import make_prime_field
    >>> str(x_n_minus_one(make_prime_field(7), 3))
    '6 + x^3'
    """
    if n < 1:
        raise ValueError(f"n must be positive, not {n}")
    return Poly(field, [int(-field.one)] + [0] * (n - 1) + [1])


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor"""
    a._check_other(b)
    if a.is_zero and b.is_zero:
        raise errors.BothZero("gcd(0, 0) is not defined")
    if a.is_zero:
        return b.monic()
    if b.is_zero:
        return a.monic()
    return Poly.from_galois(a.field, galois.gcd(a.to_galois(), b.to_galois())).monic()


def reciprocal(h: Poly) -> Poly:
    """h(0)^-1 x^deg(h) h(1/x), the coefficient reversal made monic

    >>> from pyqsc.field import make_prime_field
    >>> F = make_prime_field(7)
    >>> str(reciprocal(Poly(F, [6, 1])))
    '6 + x'
    """
    if h.is_zero or h.coeffs[0] == 0:
        raise errors.ZeroConstantTerm(f"{h} has a zero constant term")
    return Poly(h.field, reversed(h.coeffs)).monic()


def power_mod(base: Poly, exponent: int, modulus: Poly) -> Poly:
    base._check_other(modulus)
    if modulus.is_zero:
        raise errors.DivisionByZero("reduction modulo the zero polynomial")
    result = pow(base.to_galois(), exponent, modulus.to_galois())
    return Poly.from_galois(base.field, result)


def poly_order(f: Poly, n_hint: int) -> int:
    """Smallest a with f | x^a - 1, searched among the divisors of n_hint"""
    if f.is_zero or f.coeffs[0] == 0:
        raise errors.ZeroConstantTerm(f"{f} has a zero constant term")
    if f.degree < 1:
        raise ValueError(f"the order of the constant {f} is not defined")
    if not (x_n_minus_one(f.field, n_hint) % f).is_zero:
        raise errors.NotADivisor(f"{f} does not divide x^{n_hint} - 1")
    x = Poly.x(f.field)
    one = Poly.one(f.field) % f
    for d in galois.divisors(n_hint):
        if power_mod(x, d, f) == one:
            return d
    raise errors.PyqscError("unreachable: f divides x^n_hint - 1")


def is_irreducible(f: Poly) -> bool:
    if f.degree < 1:
        return False
    return bool(f.to_galois().is_irreducible())
