""" The factors of x^n - 1 given by the sextic classes and the coset
decomposition, and the codes they generate.

The roots of x^n - 1 live in GF(q^l) with l = ord_n(q); every factor is
built there as a product of linear terms and brought back to GF(q).
"""
import functools
import logging
import math
from collections import UserDict
from typing import Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple

import galois

from .. import errors
from ..cyclotomy import (
    ORDER,
    SexticClasses,
    class_coset_decomposition,
    cyclotomic_coset,
    multiplicative_order,
)
from ..field import (
    FieldCtx,
    SubfieldEmbedding,
    make_extension_field,
    nth_root_of_unity,
)
from ..poly import Poly, x_n_minus_one
from .cyclic import CyclicCode, augment

logger = logging.getLogger(__name__)


class SplittingContext:
    """GF(q^l) with a primitive n-th root of unity eta and the embedding of GF(q)"""

    def __init__(self, n: int, base: FieldCtx, root_power: int = 1) -> None:
        if math.gcd(root_power, n) != 1:
            raise ValueError(f"eta^{root_power} is not a primitive {n}-th root of unity")
        self.n = n
        self.base = base
        self.ell = multiplicative_order(base.order, n)
        self.ext = make_extension_field(base.p, base.m * self.ell)
        self.eta = nth_root_of_unity(self.ext, n) ** root_power
        self.embedding = SubfieldEmbedding(base, self.ext)
        logger.debug(
            "Splitting field of x^%d - 1 over GF(%d): GF(%d)", n, base.order, self.ext.order
        )

    def poly_from_exponents(self, exponents: Iterable[int]) -> Poly:
        """prod(x - eta^j) over the exponents, as a polynomial over the base field"""
        roots = self.ext.gf([int(self.eta ** j) for j in exponents])
        product = galois.Poly.Roots(roots)
        restrict = self.embedding.restrict
        return Poly(self.base, [restrict(c) for c in product.coeffs[::-1]])

    def zeros(self, poly: Poly) -> Tuple[int, ...]:
        """Exponents j in [0, n) with poly(eta^j) = 0"""
        embed = self.embedding.embed
        lifted = galois.Poly(
            [int(embed(c)) for c in poly.coeffs] or [0], field=self.ext.gf, order="asc"
        )
        points = self.ext.gf([int(self.eta ** j) for j in range(self.n)])
        values = lifted(points)
        return tuple(j for j in range(self.n) if values[j] == 0)


@functools.lru_cache(maxsize=None)
def splitting_context(n: int, base: FieldCtx, root_power: int = 1) -> SplittingContext:
    return SplittingContext(n, base, root_power)


def _check_residue(classes: SexticClasses, field: FieldCtx) -> None:
    if field.order % classes.n not in classes.members(0):
        raise errors.QNotSexticResidue(
            f"{field.order} is not a sextic residue modulo {classes.n}"
        )


class SexticGenerators:
    """The six polynomials g_i = prod(x - eta^j, j in class i), with
    (x - 1) g_0 ... g_5 = x^n - 1. Indices are taken modulo 6.
    """

    def __init__(
        self,
        classes: SexticClasses,
        field: FieldCtx,
        generators: Sequence[Poly],
        residual: Poly,
    ) -> None:
        self.classes = classes
        self.field = field
        self.generators = tuple(generators)
        self.residual = residual

    @property
    def n(self) -> int:
        return self.classes.n

    @property
    def q(self) -> int:
        return self.field.order

    def __getitem__(self, i: int) -> Poly:
        return self.generators[i % ORDER]

    def __iter__(self) -> Iterator[Poly]:
        return iter(self.generators)

    def __len__(self) -> int:
        return ORDER

    def product(self, indices: Iterable[int]) -> Poly:
        """Product of the distinct g_i named by indices (taken mod 6)"""
        distinct = sorted({i % ORDER for i in indices})
        if not distinct:
            raise ValueError("at least one class index is needed")
        result = Poly.one(self.field)
        for i in distinct:
            result = result * self.generators[i]
        return result

    def code(self, indices: Iterable[int]) -> CyclicCode:
        """The cyclic code generated by the product of the g_i"""
        return CyclicCode(self.n, self.field, self.product(indices))

    def verify_factorization(self) -> bool:
        total = self.residual
        for g in self.generators:
            total = total * g
        return total == x_n_minus_one(self.field, self.n)


def build_sextic_generators(
    classes: SexticClasses, field: FieldCtx, root_power: int = 1
) -> SexticGenerators:
    """
    >>> from pyqsc.cyclotomy import sextic_classes
    >>> from pyqsc.field import make_prime_field
    >>> gens = build_sextic_generators(sextic_classes(31), make_prime_field(2))
    >>> [g.degree for g in gens]
    [5, 5, 5, 5, 5, 5]
    >>> gens.verify_factorization()
    True
    """
    _check_residue(classes, field)
    context = splitting_context(classes.n, field, root_power)
    generators = [context.poly_from_exponents(members) for members in classes.classes]
    residual = Poly.x(field) - Poly.one(field)
    return SexticGenerators(classes, field, generators, residual)


class MinimalPolySet(UserDict):
    """Minimal polynomials M_s over GF(q), keyed by the smallest element s
    of their cyclotomic coset; M_0 = x - 1.

    Asking for a key that is not a coset representative raises
    :class:`pyqsc.errors.NotAFactor`.
    """

    def __init__(
        self,
        polys: Mapping[int, Poly],
        decomposition: Dict[int, Tuple[int, ...]],
        cosets: Dict[int, Tuple[int, ...]],
    ) -> None:
        super().__init__(polys)
        self.decomposition = decomposition
        self.cosets = cosets

    def __getitem__(self, key: int) -> Poly:
        try:
            return self.data[key]
        except KeyError:
            raise errors.NotAFactor(f"{key} is not a coset representative") from None

    def class_factors(self, i: int) -> Tuple[Poly, ...]:
        """The minimal polynomials whose product is g_i"""
        return tuple(self.data[s] for s in self.decomposition[i % ORDER])


def build_minimal_polys(
    classes: SexticClasses, field: FieldCtx, root_power: int = 1
) -> MinimalPolySet:
    """
    >>> from pyqsc.cyclotomy import sextic_classes
    >>> from pyqsc.field import make_prime_field
    >>> M = build_minimal_polys(sextic_classes(127), make_prime_field(2))
    >>> M.decomposition[1]
    (3, 7, 23)
    >>> M[1].degree
    7
    """
    _check_residue(classes, field)
    decomposition = class_coset_decomposition(classes, field.order)
    context = splitting_context(classes.n, field, root_power)
    polys = {0: Poly.x(field) - Poly.one(field)}
    cosets = {0: (0,)}
    for representatives in decomposition.values():
        for s in representatives:
            coset = cyclotomic_coset(s, classes.n, field.order)
            polys[s] = context.poly_from_exponents(coset.elements)
            cosets[s] = coset.elements
    return MinimalPolySet(polys, decomposition, cosets)


def code_c(gens: SexticGenerators, i: int) -> CyclicCode:
    """<g_i>"""
    return gens.code((i,))


def code_c_bar(gens: SexticGenerators, i: int) -> CyclicCode:
    """<(x - 1) g_i g_(i+1) g_(i+2) g_(i+4) g_(i+5)>, the dual of <g_i>"""
    generator = gens.residual * gens.product((i, i + 1, i + 2, i + 4, i + 5))
    return CyclicCode(gens.n, gens.field, generator)


def code_d(gens: SexticGenerators, i: int) -> CyclicCode:
    """<g_i g_(i+1) g_(i+2)>"""
    return gens.code((i, i + 1, i + 2))


def code_d_bar(gens: SexticGenerators, i: int) -> CyclicCode:
    """<(x - 1) g_(i+3) g_(i+4) g_(i+5)>

    Not the dual of <g_i g_(i+1) g_(i+2)>, which is generated by
    (x - 1) g_i g_(i+1) g_(i+2).
    """
    generator = gens.residual * gens.product((i + 3, i + 4, i + 5))
    return CyclicCode(gens.n, gens.field, generator)


def subset_code(
    gens: SexticGenerators,
    indices: Iterable[int],
    minimal_polys: Optional[MinimalPolySet] = None,
    drop: Iterable[int] = (),
) -> CyclicCode:
    """Product of a subset of the g_i, optionally augmented by dropping minimal polynomials"""
    code = gens.code(indices)
    drop = tuple(drop)
    if drop:
        if minimal_polys is None:
            raise ValueError("minimal polynomials are needed to drop factors")
        code = augment(code, minimal_polys, drop)
    return code
