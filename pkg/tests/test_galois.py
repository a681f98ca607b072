import itertools
import math
import random
from collections import Counter

import pytest
import sympy

from splitlaw import arith, galois
from splitlaw.balls import isolate_roots
from splitlaw.galois import (
    c_sigma, class_product, closed_form_class, cycle_type_of, cycle_types, exclusion_value, group_product,
)
from splitlaw.nf import MonicPoly

X4 = [-1, -1, 0, 0, 1]


def random_irreducible(rng, k, lo=-10, hi=10):
    x = sympy.symbols("x")
    while True:
        f = [rng.randint(lo, hi) for _ in range(k)] + [1]
        if f[0] != 0 and sympy.Poly(list(reversed(f)), x).is_irreducible:
            return f


@pytest.mark.parametrize("k", range(1, 7))
def test_permutations_of_type_partition_sk(k):
    buckets = Counter(cycle_type_of(p) for p in itertools.permutations(range(k)))
    assert sum(galois.class_size(ct) for ct in cycle_types(k)) + 1 == math.factorial(k)
    for ct in cycle_types(k):
        perms = list(galois.permutations_of_type(ct))
        assert len(perms) == len(set(perms)) == buckets[ct] == galois.class_size(ct)
        assert all(cycle_type_of(p) == ct for p in perms)


def test_cycle_type_helpers():
    assert galois.normalize_type([3], 5) == (1, 1, 3)
    assert galois.is_even((1, 3)) and not galois.is_even((4,))
    assert galois.is_involutive((2, 2)) and not galois.is_involutive((1, 3))
    assert cycle_types(4)[0] == (1, 1, 2)


def test_c_sigma_examples():
    r = isolate_roots([-1, -1, 0, 0, 0, 1], 128)
    assert c_sigma(r, range(5), arith.newton_bootstrap([-1, -1, 0, 0, 0, 1], 3)[2]).contains_int(0)
    f = [3, -5, 1]
    r = isolate_roots(f, 128)
    t2 = arith.newton_bootstrap(f, 3)[2]
    assert c_sigma(r, (1, 0), t2).contains_int(-arith.discriminant(f))
    r = isolate_roots([1, 0, 1], 128)
    assert c_sigma(r, (1, 0), -2).contains_int(4)


def test_transposition_class_random_irreducible():
    rng = random.Random(7)
    for _ in range(50):
        k = rng.randint(3, 6)
        f = random_irreducible(rng, k)
        want = (-1) ** (k * (k - 1) // 2) * arith.discriminant(f)
        assert class_product(f, [2]).value == want, f


@pytest.mark.parametrize("k", [3, 4])
def test_closed_forms_match_enumeration(k):
    rng = random.Random(100 + k)
    for _ in range(30):
        f = random_irreducible(rng, k)
        e = arith.elementary_symmetric(f)
        for ct in cycle_types(k):
            assert closed_form_class(k, e, ct) == class_product(f, ct).value, (f, ct)


def test_closed_form_examples():
    e4 = [0, 0, 1, -1]
    assert closed_form_class(4, e4, (2, 2)) == 8
    assert closed_form_class(4, e4, (1, 3)) == 256
    assert closed_form_class(4, e4, (4,)) == 1
    assert closed_form_class(3, [0, -1, 1], (3,)) == 9


def test_quartic_class_values():
    got = {cp.cycle_type: cp.value for cp in galois.class_products(X4)}
    assert got == {(1, 1, 2): -283, (2, 2): 8, (1, 3): 256, (4,): 1}
    assert math.prod(got.values()) == 2**11 * arith.discriminant(X4)


def test_alt_product_quartic():
    assert group_product(X4, "alt") == 8 * 256


def test_sym_product_is_product_of_classes():
    f = [1, 3, -2, 0, 1]
    assert group_product(f, "sym") == math.prod(cp.value for cp in galois.class_products(f))


def test_non_involutive_classes_are_squares():
    rng = random.Random(11)
    for _ in range(12):
        k = rng.randint(3, 5)
        f = random_irreducible(rng, k, -6, 6)
        for cp in galois.class_products(f):
            if not cp.involutive:
                assert cp.is_square, (f, cp.cycle_type, cp.value)
                assert cp.square_root**2 == cp.value


def test_number_field_non_involutive_squares():
    from splitlaw.nf import NumberField

    K = NumberField((-1, -1, 0, 1))
    a = K.theta
    f = MonicPoly(K, (a, K(2), K(0), K(1)))
    for cp in galois.class_products(f):
        if not cp.involutive:
            assert cp.is_square and cp.square_root * cp.square_root == cp.value
        assert cp.norm is not None


def test_exclusion_modes():
    ev = exclusion_value(X4, "classes", factor=True)
    assert ev.value == -(2**11) * 283
    assert ev.prime_support() == [2, 283]
    sym = exclusion_value(X4, "sym", factor=False)
    assert sym.value == arith.discriminant(X4) * group_product(X4, "sym")
    alt = exclusion_value(X4, "alt", factor=False)
    assert alt.value == arith.discriminant(X4) * 8 * 256
    assert ev.divides_at(283) and not ev.divides_at(3)


def test_exclusion_zero_for_cyclotomic():
    ev = exclusion_value([1, 1, 1, 1, 1], "classes", factor=False)
    assert ev.is_zero and ev.divides_at(7)


def test_repeated_roots_rejected():
    with pytest.raises(ValueError):
        exclusion_value([1, 2, 1], "classes")


def test_identity_class_rejected():
    with pytest.raises(ValueError):
        class_product(X4, [1, 1, 1, 1])
