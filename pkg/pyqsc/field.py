""" Finite fields GF(p) and GF(p^m).

The arithmetic itself is done by :mod:`galois`, this module only fixes the
choices that galois would otherwise make for us (the modulus polynomial and
the primitive element) so that every construction is reproducible, and
provides the embedding of a field into one of its extensions.
"""
import functools
import itertools
import logging
from typing import Iterator, List, Optional, Sequence, Tuple, Union

import galois
import numpy as np

from . import errors
from .typehints import FieldElement

logger = logging.getLogger(__name__)

#: Largest characteristic accepted (exclusive)
MAX_CHARACTERISTIC = 2 ** 31
#: Largest field order accepted (inclusive)
MAX_FIELD_ORDER = 2 ** 40


def check_prime(p: int) -> None:
    """Raises NonPrime if p is not a prime number

    >>> check_prime(7)
    >>> check_prime(4)
    Traceback (most recent call last):
    ...
    pyqsc.errors.NonPrime: 4 is not a prime
    """
    if int(p) >= MAX_CHARACTERISTIC:
        raise errors.TooLarge(
            f"characteristic {p} is not below {MAX_CHARACTERISTIC}"
        )
    if int(p) < 2 or not galois.is_prime(int(p)):
        raise errors.NonPrime(f"{p} is not a prime")


def first_irreducible_modulus(p: int, m: int) -> Tuple[int, ...]:
    """Returns the ascending coefficients of the first monic irreducible
    polynomial of degree m over GF(p).

    Candidates are enumerated in lexicographic order of their coefficient
    vectors, constant term first.

    >>> first_irreducible_modulus(2, 5)
    (1, 0, 0, 1, 0, 1)
    >>> first_irreducible_modulus(7, 3)
    (1, 0, 1, 1)
    """
    prime_field = galois.GF(p)
    # a zero constant term means x divides the candidate
    for constant in range(1, p):
        for middle in itertools.product(range(p), repeat=m - 1):
            coefficients = (constant, *middle, 1)
            candidate = galois.Poly(list(coefficients), field=prime_field, order="asc")
            if candidate.is_irreducible():
                return coefficients
    raise errors.PyqscError(f"No irreducible polynomial of degree {m} over GF({p})")


class FieldCtx:
    """A finite field GF(p^m) together with the data that defines it.

    Elements are galois arrays of the field class stored in :attr:`gf`,
    their integer representation encodes the coefficient vector
    (c_0, ..., c_{m-1}) as sum(c_i * p**i).

    >>> F = make_extension_field(2, 5)
    >>> F
    <FieldCtx(GF(2^5), modulus=1 + x^3 + x^5)>
    >>> F.order
    32
    >>> F.vector(F.element([0, 1, 1, 0, 0]))
    (0, 1, 1, 0, 0)
    """

    def __init__(
        self, p: int, m: int = 1, modulus: Optional[Sequence[int]] = None
    ) -> None:
        check_prime(p)
        if m < 1:
            raise ValueError(f"extension degree must be >= 1, not {m}")
        if p ** m > MAX_FIELD_ORDER:
            raise errors.TooLarge(f"GF({p}^{m}) is larger than {MAX_FIELD_ORDER}")

        self.p: int = int(p)
        self.m: int = int(m)
        self.order: int = self.p ** self.m
        #: Ascending coefficients of the modulus, None for prime fields
        self.modulus: Optional[Tuple[int, ...]] = None

        if self.m == 1:
            self.gf = galois.GF(self.p)
        else:
            if modulus is None:
                modulus = first_irreducible_modulus(self.p, self.m)
            modulus = tuple(int(c) for c in modulus)
            irreducible = galois.Poly(
                list(modulus), field=galois.GF(self.p), order="asc"
            )
            if (
                len(modulus) != self.m + 1
                or modulus[-1] != 1
                or not irreducible.is_irreducible()
            ):
                raise ValueError(
                    f"{modulus} is not a monic irreducible polynomial of degree {m}"
                )
            self.modulus = modulus
            self.gf = galois.GF(self.order, irreducible_poly=irreducible)
        logger.debug("Constructed %r", self)

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def zero(self) -> FieldElement:
        return self.gf(0)

    @property
    def one(self) -> FieldElement:
        return self.gf(1)

    def element(self, value: Union[int, Sequence[int]]) -> FieldElement:
        """Returns the element given by its integer representation
        or by its coefficient vector (constant term first)
        """
        if isinstance(value, (int, np.integer)):
            if not 0 <= int(value) < self.order:
                raise ValueError(f"{value} is not an element of GF({self.order})")
            return self.gf(int(value))
        coefficients = [int(c) for c in value]
        if len(coefficients) != self.m or any(not 0 <= c < self.p for c in coefficients):
            raise ValueError(
                f"{coefficients} is not a coefficient vector of length {self.m} over GF({self.p})"
            )
        return self.gf(sum(c * self.p ** i for i, c in enumerate(coefficients)))

    def vector(self, a: Union[FieldElement, int]) -> Tuple[int, ...]:
        """Returns the coefficient vector of a, constant term first"""
        value = int(a)
        coefficients = []
        for _ in range(self.m):
            value, c = divmod(value, self.p)
            coefficients.append(c)
        return tuple(coefficients)

    def contains(self, a) -> bool:
        return isinstance(a, self.gf)

    def lexicographic_elements(self) -> Iterator[int]:
        """Yields the integer representation of every element, ordered
        lexicographically by coefficient vector (constant term first)
        """
        for coefficients in itertools.product(range(self.p), repeat=self.m):
            yield sum(c * self.p ** i for i, c in enumerate(coefficients))

    def element_order(self, a: FieldElement) -> int:
        """Multiplicative order of a nonzero element"""
        if a == 0:
            raise errors.DivisionByZero("0 has no multiplicative order")
        for d in galois.divisors(self.order - 1):
            if a ** d == 1:
                return d
        raise errors.PyqscError("unreachable: Lagrange")

    @functools.cached_property
    def primitive_element(self) -> FieldElement:
        """The first generator of the multiplicative group in lexicographic order"""
        group_order = self.order - 1
        if group_order == 1:
            return self.one
        primes, _ = galois.factors(group_order)
        for value in self.lexicographic_elements():
            if value == 0:
                continue
            candidate = self.gf(value)
            if all(candidate ** (group_order // r) != 1 for r in primes):
                logger.debug("Primitive element of %r: %s", self, self.vector(candidate))
                return candidate
        raise errors.PyqscError(f"No primitive element found in {self!r}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldCtx):
            return NotImplemented
        return (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        if self.modulus is None:
            return f"<FieldCtx(GF({self.p}))>"
        terms = []
        for i, c in enumerate(self.modulus):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
                continue
            monomial = "x" if i == 1 else f"x^{i}"
            terms.append(monomial if c == 1 else f"{c}*{monomial}")
        return f"<FieldCtx(GF({self.p}^{self.m}), modulus={' + '.join(terms)})>"


@functools.lru_cache(maxsize=None)
def make_extension_field(p: int, m: int) -> FieldCtx:
    """Returns GF(p^m), always the same object for the same (p, m)

    >>> make_extension_field(2, 1) is make_prime_field(2)
    True
    """
    return FieldCtx(p, m)


def make_prime_field(p: int) -> FieldCtx:
    """Returns GF(p)

    >>> make_prime_field(7).order
    7
    """
    return make_extension_field(p, 1)


def make_field(q: int) -> FieldCtx:
    """Returns GF(q) for a prime power q

    >>> make_field(8)
    <FieldCtx(GF(2^3), modulus=1 + x + x^3)>
    """
    if q < 2 or not galois.is_prime_power(int(q)):
        raise errors.NotPrimePower(f"{q} is not a prime power")
    primes, exponents = galois.factors(int(q))
    return make_extension_field(int(primes[0]), int(exponents[0]))


def _check_same_field(a: FieldElement, b: FieldElement) -> None:
    if type(a) is not type(b):
        raise errors.FieldMismatch(
            f"operands belong to different fields: {type(a).name} and {type(b).name}"
        )


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same_field(a, b)
    return a + b


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same_field(a, b)
    return a - b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    """
    >>> F = make_prime_field(7)
    >>> int(mul(F.element(3), F.element(5)))
    1
    """
    _check_same_field(a, b)
    return a * b


def neg(a: FieldElement) -> FieldElement:
    return -a


def inv(a: FieldElement) -> FieldElement:
    """
    >>> F = make_prime_field(7)
    >>> int(inv(F.element(3)))
    5
    """
    if a == 0:
        raise errors.DivisionByZero("0 has no inverse")
    return a ** -1


def div(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same_field(a, b)
    return a * inv(b)


def power(a: FieldElement, exponent: int) -> FieldElement:
    """a**exponent, negative exponents go through the inverse"""
    if exponent < 0:
        return inv(a) ** (-exponent)
    return a ** exponent


def nth_root_of_unity(field: FieldCtx, n: int) -> FieldElement:
    """Returns an element of multiplicative order exactly n.

    The root is g^((q-1)/n) where g is the field's primitive element,
    so it is the same for every construction of the field.

    >>> F = make_prime_field(7)
    >>> F.element_order(nth_root_of_unity(F, 6))
    6
    """
    if n < 1:
        raise ValueError(f"n must be positive, not {n}")
    if (field.order - 1) % n != 0:
        raise errors.NoSuchRoot(f"{n} does not divide {field.order - 1}")
    return field.primitive_element ** ((field.order - 1) // n)


class SubfieldEmbedding:
    """The embedding of a field `base` into an extension `ext` of it.

    When base is a prime field, its elements are the constants of ext and
    share their integer representation. Otherwise a root beta of base's
    modulus is searched in ext and c_0 + c_1 x + ... is sent to
    c_0 + c_1 beta + ...
    """

    def __init__(self, base: FieldCtx, ext: FieldCtx) -> None:
        if base.p != ext.p or ext.m % base.m != 0:
            raise errors.FieldMismatch(f"{ext!r} is not an extension of {base!r}")
        self.base = base
        self.ext = ext

        if base == ext or base.m == 1:
            images: List[int] = list(range(base.order))
        else:
            beta = self._modulus_root()
            beta_powers = [beta ** i for i in range(base.m)]
            images = []
            for value in range(base.order):
                image = ext.zero
                for c, b in zip(base.vector(value), beta_powers):
                    image = image + ext.gf(c) * b
                images.append(int(image))
        self._images = images
        self._preimages = {image: value for value, image in enumerate(images)}

    def _modulus_root(self) -> FieldElement:
        base, ext = self.base, self.ext
        modulus = galois.Poly(list(base.modulus), field=ext.gf, order="asc")
        # the copy of base in ext is {0} and the powers of this element
        subfield_generator = ext.primitive_element ** (
            (ext.order - 1) // (base.order - 1)
        )
        for j in range(base.order - 1):
            candidate = subfield_generator ** j
            if modulus(candidate) == 0:
                return candidate
        raise errors.PyqscError(f"{base!r} modulus has no root in {ext!r}")

    def embed(self, a: Union[FieldElement, int]) -> FieldElement:
        return self.ext.gf(self._images[int(a)])

    def restrict(self, a: Union[FieldElement, int]) -> int:
        """Returns the integer representation in base of an element of ext
        lying in the image of the embedding
        """
        try:
            return self._preimages[int(a)]
        except KeyError:
            raise errors.CoefficientNotInBaseField(
                f"{int(a)} of GF({self.ext.order}) is not in the image of GF({self.base.order})"
            ) from None
