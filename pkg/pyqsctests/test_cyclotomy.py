import pytest

from pyqsc import errors
from pyqsc.cyclotomy import (
    ORDER,
    ValidPair,
    class_coset_decomposition,
    cyclotomic_coset,
    enumerate_valid_pairs,
    is_sextic_residue,
    multiplicative_order,
    negation_map_check,
    sextic_classes,
    smallest_primitive_root,
)

PRIMES_7_MOD_12 = [7, 19, 31, 43, 67, 79, 103, 127, 139, 151, 163, 199]


def test_classes_of_19():
    classes = sextic_classes(19)
    assert classes.gamma == 2
    assert classes.classes == (
        (1, 7, 11),
        (2, 3, 14),
        (4, 6, 9),
        (8, 12, 18),
        (5, 16, 17),
        (10, 13, 15),
    )
    assert classes.members(7) == classes.members(1)
    assert classes.class_of(-1) == 3
    with pytest.raises(ValueError):
        classes.class_of(19)


@pytest.mark.parametrize("n", PRIMES_7_MOD_12)
def test_classes_partition_the_units(n):
    classes = sextic_classes(n)
    members = [r for i in range(ORDER) for r in classes.members(i)]
    assert len(members) == n - 1
    assert set(members) == set(range(1, n))
    assert all(len(c) == classes.size for c in classes.classes)
    assert set(classes.members(0)) == {r for r in range(1, n) if is_sextic_residue(r, n)}


@pytest.mark.parametrize("n", PRIMES_7_MOD_12)
def test_negation_map(n):
    assert negation_map_check(sextic_classes(n))


def test_classes_depend_on_gamma():
    default = sextic_classes(127)
    other = sextic_classes(127, 39)
    assert default.members(0) == other.members(0)
    assert default.classes != other.classes


@pytest.mark.parametrize("n", [5, 11, 13, 55, 91, 1])
def test_bad_modulus(n):
    with pytest.raises(errors.BadModulus):
        sextic_classes(n)


@pytest.mark.parametrize("gamma", [1, 7, 19, 0, 4])
def test_not_primitive(gamma):
    with pytest.raises(errors.NotPrimitive):
        sextic_classes(19, gamma)


def test_smallest_primitive_root():
    assert smallest_primitive_root(127) == 3
    assert smallest_primitive_root(31) == 3
    with pytest.raises(errors.NonPrime):
        smallest_primitive_root(21)


def test_multiplicative_order():
    assert multiplicative_order(2, 31) == 5
    assert multiplicative_order(8, 7) == 1
    assert multiplicative_order(4, 43) == 7
    with pytest.raises(errors.NotCoprime):
        multiplicative_order(19, 19)


def test_cyclotomic_coset():
    coset = cyclotomic_coset(3, 31, 2)
    assert coset.representative == 3
    assert coset.elements == (3, 6, 12, 17, 24)
    assert coset.size == 5
    assert cyclotomic_coset(24, 31, 2) == coset
    assert cyclotomic_coset(0, 31, 2).elements == (0,)
    with pytest.raises(errors.NotCoprime):
        cyclotomic_coset(1, 21, 7)


def test_decomposition_of_19_over_7():
    decomposition = class_coset_decomposition(sextic_classes(19), 7)
    assert decomposition == {0: (1,), 1: (2,), 2: (4,), 3: (8,), 4: (5,), 5: (10,)}


def test_decomposition_of_127_over_2():
    classes = sextic_classes(127, 39)
    decomposition = class_coset_decomposition(classes, 2)
    for i in range(ORDER):
        representatives = decomposition[i]
        assert len(representatives) == 3
        assert list(representatives) == sorted(representatives)
        union = set()
        for s in representatives:
            coset = cyclotomic_coset(s, 127, 2)
            assert coset.size == 7
            assert not union & set(coset.elements)
            union |= set(coset.elements)
        assert union == set(classes.members(i))


def test_q_not_sextic_residue():
    with pytest.raises(errors.QNotSexticResidue):
        class_coset_decomposition(sextic_classes(19), 2)


def test_enumerate_valid_pairs():
    pairs = enumerate_valid_pairs(130, 8)
    assert ValidPair(127, 2, 7, 3) in pairs
    assert ValidPair(31, 2, 5, 1) in pairs
    assert ValidPair(7, 8, 1, 1) in pairs
    for pair in pairs:
        assert pair.n % 12 == 7
        assert is_sextic_residue(pair.q, pair.n)
        assert pair.t * ORDER * pair.ell == pair.n - 1
    assert enumerate_valid_pairs(6, 100) == []
    with pytest.raises(ValueError):
        enumerate_valid_pairs(0, 8)


def test_classes_of_127():
    classes = sextic_classes(127)
    assert classes.gamma == 3
    assert classes.members(1) == (
        3, 6, 7, 12, 14, 23, 24, 28, 46, 48, 56, 57, 65, 67, 75, 92, 96, 97, 101, 112, 114
    )
    assert classes.members(0) == (
        1, 2, 4, 8, 16, 19, 25, 32, 38, 47, 50, 61, 64, 73, 76, 87, 94, 100, 107, 117, 122
    )
    decomposition = class_coset_decomposition(classes, 2)
    assert decomposition == {
        0: (1, 19, 47),
        1: (3, 7, 23),
        2: (9, 11, 21),
        3: (5, 27, 63),
        4: (13, 15, 31),
        5: (29, 43, 55),
    }


def _alternative_root(n, gamma):
    for k in (5, 7, 11, 13, 17):
        if (n - 1) % k:
            return pow(gamma, k, n)
    raise AssertionError(f"no alternative primitive root for {n}")


PRIMES_UNDER_500 = [n for n in range(7, 500, 12) if all(n % d for d in range(2, int(n ** 0.5) + 1))]


@pytest.mark.parametrize("n", PRIMES_UNDER_500)
def test_negation_map_for_two_roots(n):
    gamma = smallest_primitive_root(n)
    other = _alternative_root(n, gamma)
    assert other != gamma
    for root in (gamma, other):
        classes = sextic_classes(n, root)
        assert negation_map_check(classes)
        assert classes.members(0) == sextic_classes(n).members(0)


@pytest.mark.parametrize("n", [19, 43, 127])
def test_gamma_shift(n):
    classes = sextic_classes(n)
    for i in range(ORDER):
        shifted = tuple(sorted(classes.gamma * r % n for r in classes.members(i - 1)))
        assert shifted == classes.members(i)


def test_cosets_are_closed():
    for s in range(127):
        coset = cyclotomic_coset(s, 127, 2)
        assert {2 * e % 127 for e in coset.elements} == set(coset.elements)
        assert coset.size in (1, 7)


def test_gamma_39_reverses_class_indices():
    # 39 = 3^k with k = 5 mod 6
    default = sextic_classes(127)
    other = sextic_classes(127, 39)
    assert default.class_of(39) == 5
    for i in range(ORDER):
        assert other.members(i) == default.members(-i)
    assert class_coset_decomposition(other, 2)[1] == (29, 43, 55)
