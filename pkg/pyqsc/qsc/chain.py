""" Chains of cyclic codes C2^perp <= C2 < C1 and the parameters of the
quantum synchronizable codes built from them.
"""
import functools
import logging
from typing import Dict, List, NamedTuple, Optional, Tuple, Union

import galois
import numpy as np

from .. import errors
from ..codes.cyclic import CyclicCode, dual_code, is_subcode, matrix_rank
from ..codes.distance import DistanceMethod, DistanceReport, min_distance
from ..poly import Poly, poly_order

logger = logging.getLogger(__name__)

#: Largest number of coset representatives enumerated
COSET_COUNT_LIMIT = 2 ** 16
#: Largest dual code whose cosets are enumerated
DUAL_SIZE_LIMIT = 2 ** 20


class QscChain:
    """A validated pair C2 < C1 of cyclic codes with C2 dual-containing.

    g1 divides g2 and f = g2 / g1 is the polynomial whose powers of x
    identify a cyclic shift.
    """

    def __init__(
        self,
        outer: CyclicCode,
        inner: CyclicCode,
        f: Poly,
        order: int,
        outer_distance: Optional[DistanceReport] = None,
        inner_distance: Optional[DistanceReport] = None,
    ) -> None:
        self.outer = outer
        self.inner = inner
        self.f = f
        self.order = order
        self.outer_distance = outer_distance
        self.inner_distance = inner_distance
        self._shift_tables: Dict[Tuple[int, int], Dict[Tuple[int, ...], int]] = {}

    @property
    def n(self) -> int:
        return self.outer.n

    @property
    def q(self) -> int:
        return self.outer.q

    @property
    def field(self):
        return self.outer.field

    @property
    def g1(self) -> Poly:
        return self.outer.generator

    @property
    def g2(self) -> Poly:
        return self.inner.generator

    @property
    def k1(self) -> int:
        return self.outer.dimension

    @property
    def k2(self) -> int:
        return self.inner.dimension

    @property
    def logical_dimension(self) -> int:
        return 2 * self.k2 - self.n

    @property
    def max_tolerance(self) -> int:
        """Largest c_l + c_r the chain supports"""
        return self.order - 1

    @property
    def bit_error_bound(self) -> Optional[int]:
        if self.outer_distance is None:
            return None
        return (self.outer_distance.value - 1) // 2

    @property
    def phase_error_bound(self) -> Optional[int]:
        if self.inner_distance is None:
            return None
        return (self.inner_distance.value - 1) // 2

    @property
    def bounds_exact(self) -> bool:
        return all(
            d is not None and d.exact for d in (self.outer_distance, self.inner_distance)
        )

    @functools.cached_property
    def _x_powers(self) -> Tuple[Poly, ...]:
        x = Poly.x(self.field)
        powers = [Poly.one(self.field) % self.f]
        for _ in range(1, self.n):
            powers.append((powers[-1] * x) % self.f)
        return tuple(powers)

    def residue(self, exponent: int) -> Poly:
        """x^exponent mod f, negative exponents taken modulo n"""
        return self._x_powers[exponent % self.n]

    def shift_residues(self) -> List[Poly]:
        """x^j mod f for 0 <= j < ord(f), pairwise distinct"""
        return list(self._x_powers[: self.order])

    def shift_table(self, c_l: int, c_r: int) -> Dict[Tuple[int, ...], int]:
        """Maps the coefficients of x^j mod f to j, for -c_l < j < c_r"""
        key = (c_l, c_r)
        if key not in self._shift_tables:
            self._shift_tables[key] = {
                self.residue(j).coeffs: j for j in range(-c_l + 1, c_r)
            }
        return self._shift_tables[key]

    def __repr__(self) -> str:
        return (
            f"<QscChain([{self.n},{self.k1}]_{self.q} > [{self.n},{self.k2}]_{self.q},"
            f" ord(f)={self.order})>"
        )


class QscParams(NamedTuple):
    """Parameters of the (c_l, c_r)-[[n + c_l + c_r, 2 k2 - n]]_q code of a chain"""

    c_l: int
    c_r: int
    q: int
    length: int
    logical_dimension: int
    bit_errors: Optional[int]
    phase_errors: Optional[int]
    bounds_exact: bool
    max_tolerance: int

    def __str__(self) -> str:
        return f"({self.c_l},{self.c_r})-[[{self.length},{self.logical_dimension}]]_{self.q}"


def make_chain(
    outer: CyclicCode,
    inner: CyclicCode,
    with_distance: bool = True,
    method: DistanceMethod = DistanceMethod.Auto,
    budget: Optional[int] = None,
) -> QscChain:
    """Validates C2 = inner < C1 = outer and builds the chain.

    Parameters
    ----------
    outer: CyclicCode
        C1, the larger code
    inner: CyclicCode
        C2, the dual-containing code
    with_distance: bool
        whether to compute the minimum distances of both codes
    method: DistanceMethod
        strategy for the minimum distances
    budget: int, optional
        weight cap of the distance search

    Returns
    -------
    QscChain
    """
    if outer.n != inner.n or outer.field != inner.field:
        raise errors.LengthMismatch(f"{outer!r} and {inner!r} do not live in the same space")
    n = outer.n
    if outer.dimension <= inner.dimension or 2 * inner.dimension <= n:
        raise errors.DimensionOrder(
            f"need k1 > k2 > n / 2, got k1={outer.dimension}, k2={inner.dimension}, n={n}"
        )
    if not is_subcode(inner, outer):
        raise errors.NotNested(f"{outer.generator} does not divide {inner.generator}")
    if not is_subcode(dual_code(inner), inner):
        raise errors.NotDualContaining(f"{inner!r} does not contain its dual")

    f = inner.generator // outer.generator
    order = poly_order(f, n)
    outer_distance = inner_distance = None
    if with_distance:
        outer_distance = min_distance(outer, budget=budget, method=method)
        inner_distance = min_distance(inner, budget=budget, method=method)
    chain = QscChain(outer, inner, f, order, outer_distance, inner_distance)
    logger.debug("Built %r", chain)
    return chain


def qsc_params(chain: QscChain, c_l: int, c_r: int) -> QscParams:
    """
    >>> from pyqsc.field import make_prime_field
    >>> from pyqsc.poly import Poly
    >>> from pyqsc.codes import code_from_generator
    >>> F = make_prime_field(2)
    >>> outer = code_from_generator(7, F, Poly(F, [1]))
    >>> inner = code_from_generator(7, F, Poly(F, [1, 1, 0, 1]))
    >>> str(qsc_params(make_chain(outer, inner), 2, 4))
    '(2,4)-[[13,1]]_2'
    """
    if c_l < 0 or c_r < 0:
        raise ValueError(f"shifts must be nonnegative, got c_l={c_l}, c_r={c_r}")
    if c_l + c_r >= chain.order:
        raise errors.ToleranceExceeded(
            f"c_l + c_r = {c_l + c_r} is not below ord(f) = {chain.order}"
        )
    return QscParams(
        c_l=c_l,
        c_r=c_r,
        q=chain.q,
        length=chain.n + c_l + c_r,
        logical_dimension=chain.logical_dimension,
        bit_errors=chain.bit_error_bound,
        phase_errors=chain.phase_error_bound,
        bounds_exact=chain.bounds_exact,
        max_tolerance=chain.max_tolerance,
    )


def coset_representatives(
    source: Union[QscChain, CyclicCode],
    count_limit: int = COSET_COUNT_LIMIT,
    dual_limit: int = DUAL_SIZE_LIMIT,
) -> galois.FieldArray:
    """One word per coset of C2^perp in C2, as rows of a matrix.

    Each coset is represented by its lexicographically smallest word, found
    by zeroing the pivot coordinates of the reduced row echelon basis of
    C2^perp. Rows are sorted.
    """
    code = source.inner if isinstance(source, QscChain) else source
    dual = dual_code(code)
    if not is_subcode(dual, code):
        raise errors.NotDualContaining(f"{code!r} does not contain its dual")
    q, n = code.q, code.n
    logical = 2 * code.dimension - n
    if q ** logical > count_limit or q ** dual.dimension > dual_limit:
        raise errors.TooLarge(
            f"{q}^{logical} cosets of a dual of size {q}^{dual.dimension}"
        )
    gf = code.field.gf
    if logical == 0:
        return gf.Zeros((1, n))

    if dual.dimension:
        reduced = dual.generator_matrix.row_reduce()
        pivots = [int(np.flatnonzero(row)[0]) for row in reduced]
        basis = reduced
    else:
        reduced, pivots, basis = None, [], gf.Zeros((0, n))

    complement = []
    rank = len(pivots)
    for row in code.generator_matrix:
        candidate = np.concatenate((basis, row[np.newaxis, :]), axis=0)
        if matrix_rank(candidate) > rank:
            basis, rank = candidate, rank + 1
            complement.append(row)
        if len(complement) == logical:
            break
    complement = gf(np.stack([np.asarray(r) for r in complement]))

    place_values = q ** np.arange(logical, dtype=np.int64)
    indices = np.arange(q ** logical, dtype=np.int64)
    digits = gf((indices[:, np.newaxis] // place_values) % q)
    words = digits @ complement
    if reduced is not None:
        words = words - words[:, pivots] @ reduced
    rows = sorted(map(tuple, words.view(np.ndarray).tolist()))
    return gf(np.array(rows, dtype=np.int64))
