from fractions import Fraction

import mpmath
import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from splitlaw.nf import (
    MonicPoly, NumberField, embed, embeddings, nf_norm, reduce_elem, residue_primes_above,
)

CUBIC = NumberField((-1, -1, 0, 1))  # a^3 = a + 1
QUARTIC = NumberField((14, -2, 7, 0, 1))
IMAG = NumberField((5, 0, 1))
FIELDS = [CUBIC, QUARTIC, IMAG]

coords = st.lists(st.integers(-50, 50), min_size=4, max_size=4)


def elem(K, c):
    return K(c[: K.m])


def test_field_invariants():
    assert CUBIC.disc == -23 and CUBIC.certified
    assert QUARTIC.disc == 61504 and QUARTIC.index_bound == 248
    assert NumberField.rationals().is_rational


def test_reducible_field_not_certified():
    K = NumberField((2, -3, 1))  # (y-1)(y-2)
    assert not K.certified


def test_residue_primes_examples():
    above5 = residue_primes_above(CUBIC, 5)
    assert sorted(P.d for P in above5) == [1, 2]
    assert all(P.usable for P in above5)
    above13 = residue_primes_above(CUBIC, 13)
    assert [P.d for P in above13] == [3]
    (P7,) = residue_primes_above(NumberField.rationals(), 7)
    assert P7.norm == 7
    above2 = residue_primes_above(IMAG, 2)
    assert above2[0].ramified and not above2[0].usable
    assert all(P.disc_flagged for P in residue_primes_above(CUBIC, 23))


@pytest.mark.parametrize("K", FIELDS)
@pytest.mark.parametrize("p", [3, 7, 11, 13, 29, 101])
def test_residue_degrees_sum_to_field_degree(K, p):
    primes = residue_primes_above(K, p)
    assert sum(P.d * P.multiplicity for P in primes) == K.m


def test_reduce_examples():
    a = CUBIC.theta
    (P181,) = [P for P in residue_primes_above(CUBIC, 181) if P.d == 1]
    assert reduce_elem(a, P181) == 30
    (P5,) = [P for P in residue_primes_above(CUBIC, 5) if P.d == 1]
    assert reduce_elem(a, P5) == 2
    for P in residue_primes_above(CUBIC, 7):
        assert reduce_elem(7, P) == P.field.zero


def test_reduce_rejects_flagged_prime():
    P = residue_primes_above(IMAG, 2)[0]
    with pytest.raises(ValueError):
        reduce_elem(IMAG(3), P)


@pytest.mark.parametrize("K", FIELDS)
@given(coords, coords)
def test_reduction_is_a_ring_homomorphism(K, c1, c2):
    x, y = elem(K, c1), elem(K, c2)
    for p in (7, 11, 31):
        for P in residue_primes_above(K, p):
            if not P.usable:
                continue
            F = P.field
            assert reduce_elem(x * y, P) == F.mul(reduce_elem(x, P), reduce_elem(y, P))
            assert reduce_elem(x + y, P) == F.add(reduce_elem(x, P), reduce_elem(y, P))


def test_norm_examples():
    a = CUBIC.theta
    disc = CUBIC([1031256, -621100, 18441])
    assert nf_norm(disc) == 5**9 * 23 * 367 * 1613 * 20101
    assert nf_norm(CUBIC(1)) == 1
    u = -(a * a) + a + 2
    assert abs(nf_norm(u)) == 5
    assert nf_norm(u) == _sympy_norm(CUBIC, u.coords)


def _sympy_norm(K, c):
    y = sympy.symbols("y")
    g = sympy.Poly(list(reversed(K.g)), y)
    h = sympy.Poly(list(reversed(list(c))), y)
    return int(sympy.resultant(g, h))


@pytest.mark.parametrize("K", FIELDS)
@given(coords, coords)
def test_norm_is_multiplicative(K, c1, c2):
    x, y = elem(K, c1), elem(K, c2)
    assert nf_norm(x * y) == nf_norm(x) * nf_norm(y)
    assert nf_norm(x) == _sympy_norm(K, x.coords)


@pytest.mark.parametrize("K", FIELDS)
@given(coords.filter(any))
def test_inverse(K, c):
    x = elem(K, c)
    if not x:
        return
    assert x * x.inverse() == K(1)
    assert nf_norm(x.inverse()) == Fraction(1, nf_norm(x))


def test_embeddings_examples():
    th = embeddings(CUBIC, 128)
    real = [b for b in th if b.contains_zero() is False and abs(mpmath.im(b.mid())) < 1e-30]
    assert len(real) == 1 and abs(mpmath.re(real[0].mid()) - mpmath.mpf("1.324717957244746")) < 1e-14
    imag = embeddings(IMAG, 128)
    for b in imag:
        z = b.mid()
        assert abs(mpmath.re(z)) < 1e-30 and abs(abs(mpmath.im(z)) - mpmath.sqrt(5)) < 1e-30
    (zero,) = embeddings(NumberField.rationals(), 64)
    assert zero.contains_int(0)


@pytest.mark.parametrize("K", FIELDS)
@given(coords)
def test_embedding_is_a_homomorphism(K, c):
    x = elem(K, c)
    for th in embeddings(K, 128):
        lhs = embed(x * x + 3, th)
        v = embed(x, th)
        assert lhs.overlaps(v * v + 3)


def test_monic_poly_over_field():
    b = QUARTIC.theta
    f = MonicPoly(QUARTIC, (QUARTIC(-1), QUARTIC(0), -(b * b + 3), QUARTIC(0), QUARTIC(1)))
    assert f.k == 4
    assert f.elementary_symmetric()[1] == -(b * b + 3)


def test_monic_poly_rejects_nonmonic():
    with pytest.raises(ValueError):
        MonicPoly.over_q([1, 0, 2])
