import itertools
from pathlib import Path

import pytest

from pyqsc.codes import (
    build_minimal_polys,
    build_sextic_generators,
    code_from_generator,
    min_distance,
)
from pyqsc.cyclotomy import sextic_classes
from pyqsc.field import make_field, make_prime_field
from pyqsc.poly import Poly

SCHEMA_PATH = Path(__file__).parent.parent / "schema" / "report.json"

#: (n, q, gamma) of the contexts small enough for matrices
SMALL_CONTEXTS = [(19, 7, None), (31, 2, None), (7, 8, None), (43, 4, None)]


class Context:
    def __init__(self, n, q, gamma=None):
        self.n = n
        self.q = q
        self.field = make_field(q)
        self.classes = sextic_classes(n, gamma)
        self.gens = build_sextic_generators(self.classes, self.field)
        self.minimal_polys = build_minimal_polys(self.classes, self.field)

    def __repr__(self):
        return f"Context(n={self.n}, q={self.q})"


_contexts = {}


def get_context(n, q, gamma=None):
    if (n, q, gamma) not in _contexts:
        _contexts[n, q, gamma] = Context(n, q, gamma)
    return _contexts[n, q, gamma]


@pytest.fixture(scope="session")
def ctx_19_7():
    return get_context(19, 7)


@pytest.fixture(scope="session")
def ctx_31_2():
    return get_context(31, 2)


@pytest.fixture(scope="session")
def ctx_7_8():
    return get_context(7, 8)


@pytest.fixture(scope="session")
def ctx_43_4():
    return get_context(43, 4)


@pytest.fixture(scope="session")
def ctx_127_2():
    return get_context(127, 2)


@pytest.fixture(scope="session", params=SMALL_CONTEXTS, ids=repr)
def small_ctx(request):
    return get_context(*request.param)


@pytest.fixture()
def gf2():
    return make_prime_field(2)


@pytest.fixture()
def hamming(gf2):
    """The binary [7,4,3] code generated by 1 + x + x^3"""
    return code_from_generator(7, gf2, Poly(gf2, [1, 1, 0, 1]))


@pytest.fixture(scope="session")
def code_31_21_5(ctx_31_2):
    """A product of two g_i over GF(2) with minimum distance 5"""
    for pair in itertools.combinations(range(6), 2):
        code = ctx_31_2.gens.code(pair)
        if min_distance(code).value == 5:
            return code
    raise AssertionError("no [31,21,5] product of two sextic generators")


@pytest.fixture()
def schema_path():
    return SCHEMA_PATH
