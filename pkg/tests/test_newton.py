import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from splitlaw import arith
from splitlaw.balls import ball_sum, isolate_roots
from splitlaw.newton import NewtonSeq, term_exact, term_mod_matrix, term_mod_trace, terms_exact
from splitlaw.nf import MonicPoly, NumberField, reduce_elem, residue_primes_above

X5 = NewtonSeq.from_poly([-1, -1, 0, 0, 0, 1])
X4 = NewtonSeq.from_poly([-1, -1, 0, 0, 1])


def test_bootstrap_examples():
    assert list(X5.initial) == [5, 0, 0, 0, 4]
    assert list(NewtonSeq.from_poly([1, 0, 1]).initial) == [2, 0]
    assert terms_exact(NewtonSeq.from_poly([1, 0, 1]), 4) == [2, 0, -2, 0]
    assert terms_exact(X4, 5) == [4, 0, 0, 3, 4]


def test_exact_examples():
    assert term_exact(X5, 8) == 4
    assert term_exact(X5, 20) == 9
    assert term_exact(X5, 0) == 5
    assert terms_exact(X5, 21)[-1] == 9


@pytest.mark.parametrize("n,p,want", [(152, 151, 74), (468, 467, 250), (762, 761, 355), (2478, 2477, 695)])
def test_modular_examples(n, p, want):
    assert term_mod_matrix(X5, n, p) == want
    assert term_mod_trace(X5, n, p) == want


def test_below_order_is_bootstrap():
    for n in range(5):
        assert term_mod_trace(X5, n, 7) == X5.initial[n] % 7
        assert term_mod_matrix(X5, n, 7) == X5.initial[n] % 7


def test_negative_index_rejected():
    with pytest.raises(ValueError):
        term_exact(X5, -1)


def _random_case(rng):
    k = rng.randint(1, 7)
    f = [rng.randint(-9, 9) for _ in range(k)] + [1]
    p = rng.choice(arith.primes_below(400))
    n = rng.randint(0, 300)
    return f, p, n


def test_three_way_agreement_200_cases():
    rng = random.Random(20240611)
    for _ in range(200):
        f, p, n = _random_case(rng)
        seq = NewtonSeq.from_poly(f)
        exact = term_exact(seq, n) % p
        assert term_mod_matrix(seq, n, p) == exact, (f, p, n)
        assert term_mod_trace(seq, n, p) == exact, (f, p, n)


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=5), st.integers(0, 60))
def test_recurrence_holds(c, n):
    f = c + [1]
    seq = NewtonSeq.from_poly(f)
    k = len(c)
    T = terms_exact(seq, n + k + 1)
    assert T[n + k] == sum(seq.a[i] * T[n + i] for i in range(k))


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=5), st.integers(0, 12))
def test_power_sums_enclosed_by_roots(c, n):
    f = c + [1]
    if arith.discriminant(f) == 0:
        return
    roots = isolate_roots(f, 128)
    s = ball_sum([r**n for r in roots])
    assert s.contains_int(term_exact(NewtonSeq.from_poly(f), n))


def test_number_field_paths_agree():
    K = NumberField((-1, -1, 0, 1))
    a = K.theta
    u = -(a * a) + a + 2
    f = MonicPoly(K, (u, u**3, K(0), K(0), K(0), K(1)))
    seq = NewtonSeq.from_poly(f)
    for p in (181, 307, 11, 13):
        for P in residue_primes_above(K, p):
            for n in (0, 3, 17, P.norm + 1):
                assert term_mod_trace(seq, n, P) == term_mod_matrix(seq, n, P)
    (P181,) = [P for P in residue_primes_above(K, 181) if P.d == 1]
    (P307,) = [P for P in residue_primes_above(K, 307) if reduce_elem(a, P) == 100]
    assert term_mod_trace(seq, 182, P181) == 57
    assert term_mod_trace(seq, 308, P307) == 255
