"""Number fields K = Q[Y]/(g) in the power basis of Z[theta].

``K = NumberField([0, 1])`` (g = Y) is the rational field; it runs through
the same code as every other field.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from . import arith, ff

log = logging.getLogger(__name__)

CERTIFY_PRIME_BOUND = 1000


@dataclass(frozen=True)
class NumberField:
    g: tuple[int, ...]
    m: int = field(init=False)
    disc: int = field(init=False)
    certified: bool = field(init=False)

    def __post_init__(self):
        g = tuple(self.g)
        if not arith.is_monic(g):
            raise ValueError("defining polynomial must be monic of degree >= 1")
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "m", len(g) - 1)
        disc = arith.discriminant(list(g))
        if disc == 0:
            raise ValueError("defining polynomial is not squarefree")
        object.__setattr__(self, "disc", disc)
        ok = certify_irreducible(g, disc)
        if not ok:
            log.warning("could not certify irreducibility of %s; results assume it", list(g))
        object.__setattr__(self, "certified", ok)

    @classmethod
    def rationals(cls) -> "NumberField":
        return cls((0, 1))

    @property
    def is_rational(self) -> bool:
        return self.m == 1

    @cached_property
    def index_bound(self) -> int:
        """Largest D with D^2 | disc(g); D * O_K lies in Z[theta]."""
        fac = arith.factor_integer(self.disc, arith.EFFORT_PRESETS["low"])
        D = math.prod(p ** (e // 2) for p, e in fac.factors)
        # an unfactored cofactor only enlarges the bound when it is a square
        r = arith.exact_sqrt(fac.cofactor)
        return D * (r if r else 1)

    def __call__(self, x) -> "NFElem":
        if isinstance(x, NFElem):
            return x
        if isinstance(x, int):
            return NFElem(self, (x,) + (0,) * (self.m - 1))
        coords = list(x)
        if len(coords) > self.m:
            coords = _reduce_int(coords, self.g)
        return NFElem(self, tuple(coords) + (0,) * (self.m - len(coords)))

    @property
    def theta(self) -> "NFElem":
        if self.m == 1:
            return self(-self.g[0])
        return self([0, 1])

    def __repr__(self) -> str:
        return "QQ" if self.m == 1 else f"NumberField({list(self.g)})"

    def __hash__(self):
        return hash(self.g)

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.g == other.g

    def exact_div(self, a: "NFElem", b: "NFElem") -> "NFElem":
        return self(a) * self(b).inverse()


def _reduce_int(coeffs: list[int], g: Sequence[int]) -> list[int]:
    m = len(g) - 1
    c = list(coeffs)
    for i in range(len(c) - 1, m - 1, -1):
        t = c[i]
        if t:
            for j in range(m):
                c[i - m + j] -= t * g[j]
    return c[:m]


def certify_irreducible(g: Sequence[int], disc: int) -> bool:
    """Certify that g is irreducible over Z from its factorization patterns mod p.

    A factor over Z of degree s forces s to be a subset sum of the factor
    degrees modulo every prime; when the only common subset sums are 0 and m
    the polynomial is irreducible.
    """
    m = len(g) - 1
    if m == 1:
        return True
    common = set(range(m + 1))
    for p in arith.primes_below(CERTIFY_PRIME_BOUND):
        if disc % p == 0:
            continue
        F = ff.FqField(p)
        degs = [len(h) - 1 for h, _ in ff.factor_poly_mod(F, ff.from_ints(F, g))]
        sums = {0}
        for d in degs:
            sums |= {s + d for s in sums}
        common &= sums
        if common <= {0, m}:
            return True
    return False


class NFElem:
    """Element ``(c_0 + c_1 theta + ... ) / den`` of K."""

    __slots__ = ("K", "coords", "den")

    def __init__(self, K: NumberField, coords: Sequence[int], den: int = 1):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        coords = tuple(coords)
        if den < 0:
            coords, den = tuple(-c for c in coords), -den
        if den != 1:
            g = math.gcd(den, *coords)
            if g > 1:
                coords, den = tuple(c // g for c in coords), den // g
        self.K, self.coords, self.den = K, coords, den

    def _coerce(self, other):
        if isinstance(other, NFElem):
            return other
        if isinstance(other, int):
            return self.K(other)
        return NotImplemented

    def is_integral_coords(self) -> bool:
        return self.den == 1

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.coords == o.coords and self.den == o.den

    def __hash__(self):
        return hash((self.coords, self.den))

    def __bool__(self):
        return any(self.coords)

    def __neg__(self):
        return NFElem(self.K, tuple(-c for c in self.coords), self.den)

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return NFElem(self.K, tuple(a + b for a, b in zip(self.coords, o.coords)), self.den)
        return NFElem(
            self.K,
            tuple(a * o.den + b * self.den for a, b in zip(self.coords, o.coords)),
            self.den * o.den,
        )

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return NFElem(self.K, tuple(c * other for c in self.coords), self.den)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        K = self.K
        if K.m == 1:
            return NFElem(K, (self.coords[0] * o.coords[0],), self.den * o.den)
        prod = arith.poly_mul(self.coords, o.coords)
        return NFElem(K, _reduce_int(prod, K.g), self.den * o.den)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.K(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def multiplication_matrix(self) -> list[list[int]]:
        """Integer matrix of x -> self*x on the power basis (columns = images), times den."""
        K = self.K
        cols = []
        b = K(1)
        num = NFElem(K, self.coords)
        for _ in range(K.m):
            cols.append(list((num * b).coords))
            b = b * K.theta
        return [[cols[j][i] for j in range(K.m)] for i in range(K.m)]

    def inverse(self) -> "NFElem":
        if not self:
            raise ZeroDivisionError("inverse of zero in K")
        K = self.K
        M = [[Fraction(v) for v in row] for row in self.multiplication_matrix()]
        rhs = [Fraction(1)] + [Fraction(0)] * (K.m - 1)
        sol = _solve_q(M, rhs)
        den = math.lcm(*(s.denominator for s in sol))
        coords = [int(s * den) for s in sol]
        # num/den of self, inverse of num is sol, so (num/den)^-1 = den * sol
        return NFElem(K, tuple(c * self.den for c in coords), den)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __repr__(self) -> str:
        return format_elem(self)

    def __str__(self) -> str:
        return format_elem(self)


def _solve_q(M, rhs):
    n = len(M)
    A = [row[:] + [rhs[i]] for i, row in enumerate(M)]
    for col in range(n):
        piv = next(r for r in range(col, n) if A[r][col] != 0)
        A[col], A[piv] = A[piv], A[col]
        pv = A[col][col]
        A[col] = [v / pv for v in A[col]]
        for r in range(n):
            if r != col and A[r][col] != 0:
                f = A[r][col]
                A[r] = [a - f * b for a, b in zip(A[r], A[col])]
    return [A[i][n] for i in range(n)]


def format_elem(x: NFElem) -> str:
    if x.K.m == 1 and x.den == 1:
        return str(x.coords[0])
    body = "[" + ",".join(str(c) for c in x.coords) + "]"
    return body if x.den == 1 else f"{body}/{x.den}"


def nf_norm(x: NFElem) -> Fraction | int:
    """Norm from K to Q, as Res(g, x~) / den^m."""
    K = x.K
    poly = arith.normalize(list(x.coords))
    if not poly:
        return 0
    r = arith.resultant(list(K.g), poly)
    if x.den == 1:
        return r
    v = Fraction(r, x.den**K.m)
    return v.numerator if v.denominator == 1 else v


# ---------------------------------------------------------------------------
# polynomials over K


@dataclass(frozen=True)
class MonicPoly:
    """Monic f in Z[theta][X], coefficients lowest degree first."""

    K: NumberField
    coeffs: tuple

    def __post_init__(self):
        cs = tuple(self.K(c) for c in self.coeffs)
        if len(cs) < 2 or cs[-1] != 1:
            raise ValueError("polynomial must be monic of degree >= 1")
        if any(c.den != 1 for c in cs):
            raise ValueError("coefficients must lie in Z[theta]")
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def over_q(cls, coeffs: Sequence[int]) -> "MonicPoly":
        return cls(NumberField.rationals(), tuple(coeffs))

    @property
    def k(self) -> int:
        return len(self.coeffs) - 1

    def int_coeffs(self) -> list[int]:
        if not self.K.is_rational:
            raise ValueError("polynomial is not defined over Q")
        return [c.coords[0] for c in self.coeffs]

    def values(self) -> list:
        """Coefficients as ints over Q, NFElems otherwise."""
        return self.int_coeffs() if self.K.is_rational else list(self.coeffs)

    def elementary_symmetric(self) -> list:
        return arith.elementary_symmetric(self.values())

    @cached_property
    def discriminant(self):
        if self.K.is_rational:
            return arith.discriminant(self.int_coeffs())
        return arith.discriminant(list(self.coeffs), self.K.exact_div)

    def reduce(self, P: "ResiduePrime") -> list:
        return ff.trim(P.field, [reduce_elem(c, P) for c in self.coeffs])

    def __str__(self) -> str:
        from .parse import format_poly

        return format_poly(self)


# ---------------------------------------------------------------------------
# residue primes


@dataclass(frozen=True)
class ResiduePrime:
    """The prime (p, h(theta)) of K, h an irreducible factor of g mod p."""

    K: NumberField
    p: int
    h: tuple[int, ...]
    multiplicity: int = 1

    @property
    def d(self) -> int:
        return len(self.h) - 1

    @property
    def norm(self) -> int:
        return self.p**self.d

    @property
    def ramified(self) -> bool:
        return self.multiplicity > 1

    @property
    def disc_flagged(self) -> bool:
        return self.K.disc % self.p == 0

    @property
    def usable(self) -> bool:
        return not self.ramified and not self.disc_flagged

    @cached_property
    def field(self) -> ff.FqField:
        return ff.FqField(self.p, self.h)

    @property
    def label(self) -> str:
        if self.K.is_rational:
            return str(self.p)
        return f"({self.p}, {_format_h(self.h)})"

    def __str__(self) -> str:
        return self.label


def _format_h(h) -> str:
    from .parse import format_zpoly

    return format_zpoly(list(h), "y")


def rational_prime(p: int) -> ResiduePrime:
    return ResiduePrime(NumberField.rationals(), p, (0, 1))


def residue_primes_above(K: NumberField, p: int) -> list[ResiduePrime]:
    """One ResiduePrime per irreducible factor of g mod p.

    Factors of multiplicity > 1 are ramified; when p | disc(g) every prime is
    flagged since Z[theta] may fail to be maximal at p.
    """
    if not arith.is_prime(p):
        raise ValueError(f"{p} is not prime")
    if K.is_rational:
        return [ResiduePrime(K, p, (0, 1))]
    F = ff.FqField(p)
    return [ResiduePrime(K, p, tuple(h), mult) for h, mult in ff.factor_poly_mod(F, ff.from_ints(F, K.g))]


def reduce_elem(x, P: ResiduePrime):
    """Image of x in the residue field O_K/P."""
    if not P.usable:
        raise ValueError(f"prime {P.label} is flagged (ramified or dividing disc(g))")
    F = P.field
    if isinstance(x, int):
        return F(x)
    v = F(list(x.coords))
    if x.den != 1:
        v = F.mul(v, F.inv(F(x.den)))
    return v


def embeddings(K: NumberField, precision_bits: int = 128):
    """Certified balls around the complex roots of g (one per embedding)."""
    from .balls import isolate_roots

    if precision_bits < 64:
        raise ValueError("precision_bits must be at least 64")
    return isolate_roots(list(K.g), precision_bits)


def embed(x, theta):
    """Value of x (int or NFElem) at the embedding theta -> ball."""
    from .balls import Ball

    if isinstance(x, int):
        return Ball(x)
    acc = Ball(0)
    for c in reversed(x.coords):
        acc = acc * theta + c
    if x.den != 1:
        acc = acc / Ball(x.den)
    return acc
