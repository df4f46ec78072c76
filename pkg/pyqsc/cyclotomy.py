""" Residue combinatorics modulo a prime n: primitive roots, the six
sextic cyclotomic classes and the q-ary cyclotomic cosets they split into.
"""
import logging
import math
from typing import Dict, List, NamedTuple, Optional, Tuple

import galois

from . import errors

logger = logging.getLogger(__name__)

#: Number of cyclotomic classes
ORDER = 6


class SexticClasses(NamedTuple):
    """The six classes {gamma^(6j + i) mod n} of a prime n = 12m + 7"""

    n: int
    gamma: int
    classes: Tuple[Tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return (self.n - 1) // ORDER

    def members(self, i: int) -> Tuple[int, ...]:
        """Members of class i, the index is taken modulo 6"""
        return self.classes[i % ORDER]

    def class_of(self, r: int) -> int:
        """Index of the class holding the residue r

        >>> sextic_classes(19).class_of(7)
        0
        """
        r %= self.n
        for i, members in enumerate(self.classes):
            if r in members:
                return i
        raise ValueError(f"{r} is not a unit modulo {self.n}")


class CyclotomicCoset(NamedTuple):
    """The orbit {s q^i mod n} named by its smallest element"""

    representative: int
    n: int
    q: int
    elements: Tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.elements)


class ValidPair(NamedTuple):
    n: int
    q: int
    ell: int
    t: int


def multiplicative_order(a: int, n: int) -> int:
    """
    >>> multiplicative_order(2, 127)
    7
    >>> multiplicative_order(7, 19)
    3
    """
    if math.gcd(a, n) != 1:
        raise errors.NotCoprime(f"{a} is not invertible modulo {n}")
    if n == 1:
        return 1
    for d in galois.divisors(galois.euler_phi(n)):
        if pow(a, d, n) == 1:
            return d
    raise errors.PyqscError("unreachable: Euler")


def is_sextic_residue(r: int, n: int) -> bool:
    """True when r mod n is a nonzero sixth power modulo the prime n"""
    r %= n
    return r != 0 and pow(r, (n - 1) // ORDER, n) == 1


def smallest_primitive_root(n: int) -> int:
    """
    >>> smallest_primitive_root(19)
    2
    >>> smallest_primitive_root(7)
    3
    """
    if n < 2 or not galois.is_prime(n):
        raise errors.NonPrime(f"{n} is not a prime")
    return int(galois.primitive_root(n))


def sextic_classes(n: int, gamma: Optional[int] = None) -> SexticClasses:
    """Builds the six sextic cyclotomic classes of n

    >>> sextic_classes(19, 2).classes[0]
    (1, 7, 11)
    >>> sextic_classes(13)
    Traceback (most recent call last):
    ...
    pyqsc.errors.BadModulus: 13 is not a prime congruent to 7 modulo 12
    """
    if n < 7 or n % 12 != 7 or not galois.is_prime(n):
        raise errors.BadModulus(f"{n} is not a prime congruent to 7 modulo 12")
    if gamma is None:
        gamma = smallest_primitive_root(n)
    elif not 0 < gamma < n or not galois.is_primitive_root(gamma, n):
        raise errors.NotPrimitive(f"{gamma} is not a primitive root modulo {n}")

    size = (n - 1) // ORDER
    classes = tuple(
        tuple(sorted(pow(gamma, ORDER * j + i, n) for j in range(size)))
        for i in range(ORDER)
    )
    logger.debug("Sextic classes of %d for gamma=%d: %s", n, gamma, classes)
    return SexticClasses(n, gamma, classes)


def negation_map_check(classes: SexticClasses) -> bool:
    """True when -class[i] = class[i + 3] for i in 0, 1, 2"""
    n = classes.n
    return all(
        tuple(sorted(n - a for a in classes.members(i))) == classes.members(i + 3)
        for i in range(3)
    )


def cyclotomic_coset(s: int, n: int, q: int) -> CyclotomicCoset:
    """The q-ary cyclotomic coset of s modulo n

    >>> cyclotomic_coset(19, 127, 2).elements
    (19, 25, 38, 50, 73, 76, 100)
    """
    if math.gcd(q, n) != 1:
        raise errors.NotCoprime(f"q={q} and n={n} are not coprime")
    elements = set()
    current = s % n
    while current not in elements:
        elements.add(current)
        current = current * q % n
    ordered = tuple(sorted(elements))
    return CyclotomicCoset(ordered[0], n, q, ordered)


def class_coset_decomposition(
    classes: SexticClasses, q: int
) -> Dict[int, Tuple[int, ...]]:
    """Splits every class into q-ary cyclotomic cosets.

    Returns, for each class index, the smallest elements of the cosets
    whose union is the class, in increasing order.

    >>> class_coset_decomposition(sextic_classes(127), 2)[0]
    (1, 19, 47)
    """
    n = classes.n
    if q % n not in classes.members(0):
        raise errors.QNotSexticResidue(f"{q} is not a sextic residue modulo {n}")
    decomposition = {}
    for i in range(ORDER):
        remaining = set(classes.members(i))
        representatives = []
        while remaining:
            coset = cyclotomic_coset(min(remaining), n, q)
            representatives.append(coset.representative)
            remaining.difference_update(coset.elements)
        decomposition[i] = tuple(representatives)
    return decomposition


def enumerate_valid_pairs(n_max: int, q_max: int) -> List[ValidPair]:
    """All (n, q) with n = 12m + 7 prime and q a prime power sextic residue mod n

    >>> enumerate_valid_pairs(20, 8)
    [ValidPair(n=7, q=8, ell=1, t=1), ValidPair(n=19, q=7, ell=3, t=1)]
    """
    if n_max < 1 or q_max < 1:
        raise ValueError("bounds must be positive")
    pairs = []
    if n_max < 7:
        return pairs
    for n in galois.primes(n_max):
        n = int(n)
        if n % 12 != 7:
            continue
        for q in range(2, q_max + 1):
            if not galois.is_prime_power(q) or not is_sextic_residue(q, n):
                continue
            ell = multiplicative_order(q, n)
            pairs.append(ValidPair(n, q, ell, (n - 1) // (ORDER * ell)))
    return pairs
