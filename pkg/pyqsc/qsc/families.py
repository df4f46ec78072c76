""" The two families of synchronizable codes obtained by augmenting
<g_i> (family C) and <g_i g_(i+1) g_(i+2)> (family D).

In both cases the base code is augmented by dropping z, then z + 1, of the
minimal polynomials dividing g_i; the two augmentations form the chain.
"""
import logging
from typing import NamedTuple, Optional, Tuple

from .. import errors
from ..codes.cyclic import augment
from ..codes.distance import DistanceMethod
from ..codes.sextic import build_minimal_polys, build_sextic_generators
from ..cyclotomy import ORDER, multiplicative_order, sextic_classes
from ..field import make_field
from .chain import QscChain, make_chain

logger = logging.getLogger(__name__)

FAMILIES = ("C", "D")


class FamilyParams(NamedTuple):
    family: str
    n: int
    q: int
    ell: int
    t: int
    z: int
    class_index: int
    #: 2 z l + (2n + 1) / 3 for family C, 2 z l + 1 for family D
    logical_dimension: int
    chain: QscChain
    dropped_inner: Tuple[int, ...]
    dropped_outer: Tuple[int, ...]

    @property
    def consistent(self) -> bool:
        """Whether the witness chain has the dimension the formula predicts"""
        return self.chain.logical_dimension == self.logical_dimension


def family_dimension(family: str, n: int, ell: int, z: int) -> int:
    """
    >>> family_dimension("C", 127, 7, 1)
    99
    >>> family_dimension("D", 127, 7, 1)
    15
    """
    if family == "C":
        return 2 * z * ell + (2 * n + 1) // 3
    if family == "D":
        return 2 * z * ell + 1
    raise ValueError(f"Unknown family '{family}', expected one of {FAMILIES}")


def family_params(
    family: str,
    n: int,
    q: int,
    z: int,
    class_index: int = 1,
    gamma: Optional[int] = None,
    with_distance: bool = False,
    method: DistanceMethod = DistanceMethod.Auto,
) -> FamilyParams:
    if family not in FAMILIES:
        raise ValueError(f"Unknown family '{family}', expected one of {FAMILIES}")
    field = make_field(q)
    classes = sextic_classes(n, gamma)
    ell = multiplicative_order(q, n)
    t = (n - 1) // (ORDER * ell)
    if t < 3:
        raise errors.FamilyPreconditionFailed(
            f"g_i splits into t={t} factors over GF({q}), at least 3 are needed"
        )
    if not 0 <= z <= t - 2:
        raise errors.FamilyPreconditionFailed(f"z={z} is not in [0, {t - 2}]")

    gens = build_sextic_generators(classes, field)
    minimal_polys = build_minimal_polys(classes, field)
    i = class_index % ORDER
    if family == "C":
        base = gens.code((i,))
    else:
        base = gens.code((i, i + 1, i + 2))
    representatives = minimal_polys.decomposition[i]
    dropped_inner = representatives[:z]
    dropped_outer = representatives[: z + 1]
    inner = augment(base, minimal_polys, dropped_inner)
    outer = augment(base, minimal_polys, dropped_outer)
    chain = make_chain(outer, inner, with_distance=with_distance, method=method)

    params = FamilyParams(
        family=family,
        n=n,
        q=q,
        ell=ell,
        t=t,
        z=z,
        class_index=i,
        logical_dimension=family_dimension(family, n, ell, z),
        chain=chain,
        dropped_inner=tuple(dropped_inner),
        dropped_outer=tuple(dropped_outer),
    )
    if not params.consistent:
        logger.warning(
            "Family %s witness for n=%d q=%d z=%d has dimension %d instead of %d",
            family,
            n,
            q,
            z,
            chain.logical_dimension,
            params.logical_dimension,
        )
    return params


def family_c_params(n: int, q: int, z: int, **kwargs) -> FamilyParams:
    """Family C: chain <g_i / M_(z+1 reps)> > <g_i / M_(z reps)>

    >>> family_c_params(127, 2, 0).chain.logical_dimension
    85
    """
    return family_params("C", n, q, z, **kwargs)


def family_d_params(n: int, q: int, z: int, **kwargs) -> FamilyParams:
    """Family D, built on <g_i g_(i+1) g_(i+2)>"""
    return family_params("D", n, q, z, **kwargs)
