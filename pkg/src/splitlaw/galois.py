"""Products of c(sigma) = sum_i alpha_i alpha_sigma(i) - T_2 over permutations
of the roots: per cycle type (class products), over S_k or A_k (B_f), and the
combined exclusion value whose prime divisors void the splitting criterion.

Class products are symmetric functions of the roots, so they are computed in
ball arithmetic from certified roots and rounded to an exact integer (or an
element of Z[theta] over a number field).
"""

from __future__ import annotations

import logging
import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from . import arith
from .balls import (
    DEFAULT_MAX_BITS,
    Ball,
    PrecisionError,
    isolate_roots,
    reconstruct_integer,
    reconstruct_nf_element,
)
from .nf import MonicPoly, NFElem, NumberField, ResiduePrime, embed, embeddings, nf_norm, reduce_elem

log = logging.getLogger(__name__)

MAX_K = 8
START_BITS = 128

# ---------------------------------------------------------------------------
# cycle types and permutations


def partitions(k: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of k as nondecreasing tuples."""
    if largest is None:
        largest = k
    if k == 0:
        yield ()
        return
    for first in range(min(k, largest), 0, -1):
        for rest in partitions(k - first, first):
            yield tuple(sorted((first,) + rest))


def cycle_types(k: int) -> list[tuple[int, ...]]:
    """Nontrivial cycle types of S_k, ordered like (2,), (2,2), (3,) ... by length then parts."""
    out = [p for p in partitions(k) if max(p) > 1]
    return sorted(out, key=lambda p: (len(p), p), reverse=True)


def normalize_type(ct: Sequence[int], k: int) -> tuple[int, ...]:
    """Accept [3] or [1,1,3] for k=5; returns the full sorted partition."""
    parts = [int(x) for x in ct if int(x) > 0]
    if sum(parts) > k:
        raise ValueError(f"cycle type {list(ct)} does not fit in degree {k}")
    parts += [1] * (k - sum(parts))
    return tuple(sorted(parts))


def class_size(ct: Sequence[int]) -> int:
    k = sum(ct)
    denom = 1
    for length, mult in Counter(ct).items():
        denom *= length**mult * math.factorial(mult)
    return math.factorial(k) // denom


def is_even(ct: Sequence[int]) -> bool:
    return sum(length - 1 for length in ct) % 2 == 0


def is_involutive(ct: Sequence[int]) -> bool:
    """Every element has order <= 2."""
    return max(ct) <= 2


def cycle_type_of(perm: Sequence[int]) -> tuple[int, ...]:
    seen = [False] * len(perm)
    out = []
    for i in range(len(perm)):
        if not seen[i]:
            n, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                n += 1
            out.append(n)
    return tuple(sorted(out))


def permutations_of_type(ct: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Each permutation of {0..k-1} with the given cycle type, exactly once.

    The smallest unused point opens the next cycle; we pick its length among
    the remaining distinct lengths and then the ordered rest of the cycle.
    """
    k = sum(ct)
    perm = [-1] * k
    remaining = Counter(ct)
    free = list(range(k))

    def arrangements(pool: list[int], r: int) -> Iterator[list[int]]:
        if r == 0:
            yield []
            return
        for idx, x in enumerate(pool):
            rest = pool[:idx] + pool[idx + 1 :]
            for tail in arrangements(rest, r - 1):
                yield [x] + tail

    def rec() -> Iterator[tuple[int, ...]]:
        if not free:
            yield tuple(perm)
            return
        start = free.pop(0)
        for length in sorted(remaining):
            if remaining[length] == 0:
                continue
            remaining[length] -= 1
            for tail in arrangements(free, length - 1):
                cyc = [start] + tail
                for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                    perm[a] = b
                for x in tail:
                    free.remove(x)
                yield from rec()
                for x in tail:
                    free.append(x)
                free.sort()
            remaining[length] += 1
        free.insert(0, start)

    yield from rec()


# ---------------------------------------------------------------------------
# roots


@dataclass(frozen=True)
class RootSystem:
    """Certified roots of f under each complex embedding of K."""

    prec: int
    thetas: tuple  # embedding balls of theta (empty over Q)
    roots: tuple  # one CertifiedRoots per embedding
    t2: tuple  # T_2 per embedding, as balls
    pairs: tuple  # pairs[j][a][b] = alpha_a * alpha_b under embedding j


def _as_poly(f) -> MonicPoly:
    return f if isinstance(f, MonicPoly) else MonicPoly.over_q(list(f))


@lru_cache(maxsize=16)
def root_system(f: MonicPoly, prec: int) -> RootSystem:
    K = f.K
    k = f.k
    t2 = arith.newton_bootstrap(f.values(), 3)[2] if k >= 1 else 0
    if K.is_rational:
        thetas = ()
        coeff_sets = [f.int_coeffs()]
        t2s = [Ball(t2)]
    else:
        thetas = tuple(embeddings(K, prec))
        coeff_sets = [[embed(c, th) for c in f.coeffs[:-1]] + [1] for th in thetas]
        t2s = [embed(t2, th) for th in thetas]
    roots, pairs = [], []
    for cs in coeff_sets:
        r = isolate_roots(cs, prec)
        roots.append(r)
        P = [[None] * k for _ in range(k)]
        for a in range(k):
            for b in range(a, k):
                P[a][b] = P[b][a] = r[a] * r[b]
        pairs.append(tuple(tuple(row) for row in P))
    return RootSystem(prec, thetas, tuple(roots), tuple(t2s), tuple(pairs))


def c_sigma(roots, sigma: Sequence[int], t2) -> Ball:
    """sum_i alpha_i alpha_sigma(i) - T_2 as a ball (sigma is 0-based)."""
    acc = Ball(0)
    for i, j in enumerate(sigma):
        acc = acc + roots[i] * roots[j]
    return acc - t2


def _reconstruct(f: MonicPoly, rs: RootSystem, values: list[Ball]):
    if f.K.is_rational:
        return reconstruct_integer(values[0])
    return reconstruct_nf_element(values, f.K, rs.thetas)


def _next_prec(prec: int, values: list[Ball]) -> int:
    worst = max(v.radius_log2() for v in values)
    if math.isfinite(worst):
        return max(prec + 64, prec + math.ceil(worst) + 32)
    return 2 * prec


def symmetric_product(f, perms_of, max_bits: int = DEFAULT_MAX_BITS, start_bits: int = START_BITS):
    """Exact value of prod over the permutations yielded by perms_of() of c(sigma).

    Only meaningful when the set of permutations is stable under conjugation
    (a union of cycle types), so that the product is symmetric in the roots.
    """
    f = _as_poly(f)
    prec = start_bits
    while True:
        if prec > max_bits:
            raise PrecisionError(f"class product needs more than {max_bits} bits")
        rs = root_system(f, prec)
        values = []
        for P, t2 in zip(rs.pairs, rs.t2):
            acc = Ball(1)
            for sigma in perms_of():
                c = Ball(0)
                for i, j in enumerate(sigma):
                    c = c + P[i][j]
                acc = acc * (c - t2)
            values.append(acc)
        try:
            return _reconstruct(f, rs, values), rs.prec
        except PrecisionError:
            prec = _next_prec(rs.prec, values)
            log.debug("raising precision to %d bits", prec)


# ---------------------------------------------------------------------------
# exact values and their factorizations


def factor_value(v: int, effort: arith.Effort | None) -> tuple[arith.Factorization, int]:
    """Factor v, stripping square roots first; returns (factorization, power)
    where v = (root)^power for the largest power of two found."""
    if v == 0:
        raise ValueError("cannot factor zero")
    power = 1
    base = v
    while base > 1:
        r = arith.exact_sqrt(base)
        if r is None:
            break
        base, power = r, power * 2
    fac = arith.factor_integer(base, effort)
    if power > 1:
        fac = arith.Factorization(
            fac.sign, tuple((p, e * power) for p, e in fac.factors), fac.cofactor**power
        )
    return fac, power


def is_square_elem(x, K: NumberField) -> object | None:
    """A square root of x in Z[theta] (or Q), or None when none exists there."""
    if isinstance(x, int):
        return arith.exact_sqrt(x)
    if not x:
        return K(0)
    import mpmath

    m = K.m
    bits = max(abs(c).bit_length() for c in x.coords) + 64 * m + 64
    thetas = embeddings(K, max(128, bits))
    with mpmath.workprec(bits):
        mids = [t.mid() for t in thetas]
        vals = [mpmath.sqrt(embed(x, t).mid()) for t in thetas]
        V = mpmath.matrix([[mpmath.power(z, i) for i in range(m)] for z in mids])
        D = K.index_bound
        for signs in range(1 << (m - 1)):
            rhs = mpmath.matrix([(-1 if (signs >> j) & 1 else 1) * v for j, v in enumerate(vals)])
            try:
                sol = mpmath.lu_solve(V, rhs)
            except ZeroDivisionError:
                return None
            coords = [int(mpmath.nint(mpmath.re(s) * D)) for s in sol]
            cand = NFElem(K, coords, D)
            if cand * cand == x:
                return cand
    return None


@dataclass
class ClassProduct:
    cycle_type: tuple[int, ...]
    value: object  # int, or NFElem over a number field
    size: int
    involutive: bool
    even: bool
    precision: int = 0
    norm: int | None = None  # over a number field
    square_root: object | None = None
    factorization: arith.Factorization | None = None

    @property
    def is_square(self) -> bool:
        return self.square_root is not None

    def label(self) -> str:
        return "[" + ",".join(str(x) for x in self.cycle_type) + "]"


def class_product(f, cycle_type: Sequence[int], max_bits: int = DEFAULT_MAX_BITS,
                  effort: arith.Effort | None = None, factor: bool = False) -> ClassProduct:
    """F_S for the conjugacy class of S_k with the given cycle type."""
    f = _as_poly(f)
    k = f.k
    if k > MAX_K:
        raise ValueError(f"class enumeration supports k <= {MAX_K}")
    ct = normalize_type(cycle_type, k)
    if max(ct) == 1:
        raise ValueError("identity class is excluded from products")
    value, prec = symmetric_product(f, lambda: permutations_of_type(ct), max_bits)
    cp = ClassProduct(ct, value, class_size(ct), is_involutive(ct), is_even(ct), prec)
    _attach_metadata(cp, f.K, effort, factor)
    return cp


def _attach_metadata(cp: ClassProduct, K: NumberField, effort, factor: bool) -> None:
    v = cp.value
    if K.is_rational:
        cp.square_root = arith.exact_sqrt(v)
        if factor and v != 0:
            cp.factorization = factor_value(v, effort)[0]
    else:
        cp.norm = nf_norm(v)
        cp.square_root = is_square_elem(v, K)
        if factor and cp.norm != 0:
            cp.factorization = factor_value(cp.norm, effort)[0]


def class_products(f, types=None, max_bits: int = DEFAULT_MAX_BITS,
                   effort: arith.Effort | None = None, factor: bool = False) -> list[ClassProduct]:
    f = _as_poly(f)
    types = types if types is not None else cycle_types(f.k)
    return [class_product(f, ct, max_bits, effort, factor) for ct in types]


def group_product(f, mode: str = "sym", max_bits: int = DEFAULT_MAX_BITS):
    """B_f for Gal(f) = S_k (mode 'sym') or A_k (mode 'alt')."""
    f = _as_poly(f)
    if mode not in ("sym", "alt"):
        raise ValueError("group_product mode must be 'sym' or 'alt'")
    out = f.K(1) if not f.K.is_rational else 1
    for ct in cycle_types(f.k):
        if mode == "alt" and not is_even(ct):
            continue
        out = out * class_product(f, ct, max_bits).value
    return out


# ---------------------------------------------------------------------------
# closed forms for k <= 4


def closed_form_class(k: int, e: Sequence, cycle_type: Sequence[int]):
    """F_S as a polynomial in e_1..e_k, for k in {2, 3, 4}.  Works for ints
    and number-field elements alike."""
    if k not in (2, 3, 4):
        raise ValueError("closed forms are available for k = 2, 3, 4")
    if len(e) != k:
        raise ValueError(f"need {k} elementary symmetric values")
    ct = normalize_type(cycle_type, k)
    if max(ct) == 1:
        raise ValueError("identity class is excluded from products")
    if ct.count(2) == 1 and max(ct) == 2:
        # transpositions: (-1)^{k(k-1)/2} * disc
        f = [(-1) ** (k - i) * (e[k - i - 1] if i < k else 1) for i in range(k)] + [1]
        K = getattr(e[0], "K", None)
        d = arith.discriminant(f, K.exact_div if K is not None else None)
        return d if (k * (k - 1) // 2) % 2 == 0 else -d
    e1, e2 = e[0], e[1]
    if k == 3:
        # ct == (3,)
        return (e1 * e1 - 3 * e2) ** 2
    e3, e4 = e[2], e[3]
    if ct == (2, 2):
        return (-(e1**6) + 8 * e1**4 * e2 - 4 * e1**3 * e3 - 20 * e1**2 * e2**2 + 24 * e1**2 * e4
                + 8 * e1 * e2 * e3 + 16 * e2**3 - 64 * e2 * e4 + 8 * e3**2)
    if ct == (1, 3):
        g = (3 * e3 * e1**5 - (e2**2 + 3 * e4) * e1**4 - 19 * e3 * e2 * e1**3
             + (6 * e2**3 + 16 * e4 * e2 + 8 * e3**2) * e1**2 + (30 * e3 * e2**2 + 8 * e3 * e4) * e1
             - 9 * e2**4 - 24 * e4 * e2**2 - 24 * e3**2 * e2 - 16 * e4**2)
        return g * g
    if ct == (4,):
        h = (e1**6 - 8 * e1**4 * e2 + e1**3 * e3 + 21 * e1**2 * e2**2 - 3 * e1**2 * e4
             - 3 * e1 * e2 * e3 - 18 * e2**3 + 8 * e2 * e4 + e3**2)
        return h * h
    raise ValueError(f"no closed form for cycle type {list(ct)}")


# ---------------------------------------------------------------------------
# exclusion value

MODES = ("sym", "alt", "classes")


@dataclass
class ExclusionValue:
    """E with the property: outside primes dividing E the criterion is an equivalence.

    In mode 'classes' E is the product of all class products of S_k (which
    already contains the transposition class, i.e. +-disc(f)); in modes
    'sym' and 'alt' E = disc(f) * B_f.
    """

    poly: MonicPoly
    mode: str
    discriminant: object
    classes: list[ClassProduct]
    value: object
    norm: int | None = None
    factorization: arith.Factorization | None = None
    disc_factorization: arith.Factorization | None = None

    @property
    def K(self) -> NumberField:
        return self.poly.K

    @property
    def is_zero(self) -> bool:
        return not self.value

    def prime_support(self) -> list[int]:
        return self.factorization.primes() if self.factorization else []

    @property
    def cofactor(self) -> int:
        return self.factorization.cofactor if self.factorization else 1

    def divides_at(self, P: ResiduePrime | int) -> bool:
        """Exact test P | E (P | 0 is always true)."""
        if isinstance(P, int):
            if not self.K.is_rational:
                raise ValueError("pass a ResiduePrime over a number field")
            return self.value % P == 0
        if self.K.is_rational:
            return self.value % P.p == 0
        return reduce_elem(self.value, P) == P.field.zero


def exclusion_value(f, mode: str = "classes", effort: arith.Effort | None = None,
                    max_bits: int = DEFAULT_MAX_BITS, factor: bool = True) -> ExclusionValue:
    f = _as_poly(f)
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    disc = f.discriminant
    if not disc:
        raise ValueError("f is not squarefree")
    types = cycle_types(f.k)
    if mode == "alt":
        types = [ct for ct in types if is_even(ct)]
    classes = class_products(f, types, max_bits, effort, factor)
    E = f.K(1) if not f.K.is_rational else 1
    for cp in classes:
        E = E * cp.value
    if mode != "classes":
        E = E * disc
    ev = ExclusionValue(f, mode, disc, classes, E)
    if not f.K.is_rational:
        ev.norm = nf_norm(E)
    if factor:
        dn = disc if f.K.is_rational else nf_norm(disc)
        ev.disc_factorization = arith.factor_integer(dn, effort)
        if E:
            parts = [cp.factorization for cp in classes]
            if mode != "classes":
                parts.append(ev.disc_factorization)
            ev.factorization = merge_factorizations(parts, effort)
    if not E:
        log.warning("exclusion value is zero: the criterion gives no information")
    return ev


def merge_factorizations(parts: list[arith.Factorization], effort=None) -> arith.Factorization:
    sign = 1
    exps: Counter = Counter()
    cof = 1
    for fac in parts:
        sign *= fac.sign
        for p, e in fac.factors:
            exps[p] += e
        cof *= fac.cofactor
    # a known prime may still divide a cofactor coming from another class
    for p in list(exps):
        while cof > 1 and cof % p == 0:
            cof //= p
            exps[p] += 1
    return arith.Factorization(sign, tuple(sorted(exps.items())), cof)
