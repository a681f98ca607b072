"""Finite fields F_q and dense polynomials over them.

``FqField(p)`` is the prime field with elements stored as ints;
``FqField(p, h)`` is F_p[Y]/(h) with elements stored as d-tuples of ints
(coefficients of 1, Y, ..., Y^{d-1}).  Polynomials over a field are plain
lists of elements, lowest degree first, with no zero leading coefficient;
``[]`` is the zero polynomial.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import kernels


@dataclass(frozen=True, eq=True)
class FqField:
    p: int
    modulus: tuple[int, ...] = (0, 1)
    d: int = field(init=False)
    q: int = field(init=False)

    def __post_init__(self):
        mod = tuple(c % self.p for c in self.modulus)
        if not mod or mod[-1] != 1 or len(mod) < 2:
            raise ValueError("residue field modulus must be monic of degree >= 1")
        object.__setattr__(self, "modulus", mod)
        object.__setattr__(self, "d", len(mod) - 1)
        object.__setattr__(self, "q", self.p ** (len(mod) - 1))
        if self.d > 1 and not is_irreducible(FqField(self.p), list(mod)):
            raise ValueError(f"modulus {mod} is reducible mod {self.p}")

    def __repr__(self) -> str:
        if self.d == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.d})"

    @property
    def zero(self):
        return 0 if self.d == 1 else (0,) * self.d

    @property
    def one(self):
        return 1 if self.d == 1 else (1,) + (0,) * (self.d - 1)

    @property
    def gen(self):
        """Class of Y (for d == 1 this is the root of the linear modulus)."""
        if self.d == 1:
            return -self.modulus[0] % self.p
        return (0, 1) + (0,) * (self.d - 2)

    def __call__(self, x):
        """Coerce an int, or a coefficient sequence in Y, into the field."""
        p = self.p
        if isinstance(x, int):
            return x % p if self.d == 1 else (x % p,) + (0,) * (self.d - 1)
        coeffs = [c % p for c in x]
        if self.d == 1:
            acc, r = 0, self.gen
            for c in reversed(coeffs):
                acc = (acc * r + c) % p
            return acc
        return self._reduce(coeffs)

    def _reduce(self, coeffs: list[int]) -> tuple[int, ...]:
        p, h, d = self.p, self.modulus, self.d
        c = list(coeffs)
        for i in range(len(c) - 1, d - 1, -1):
            t = c[i] % p
            if t:
                for j in range(d):
                    c[i - d + j] = (c[i - d + j] - t * h[j]) % p
        c = [x % p for x in c[:d]]
        return tuple(c + [0] * (d - len(c)))

    def is_zero(self, a) -> bool:
        return a == 0 if self.d == 1 else not any(a)

    def add(self, a, b):
        if self.d == 1:
            return (a + b) % self.p
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b):
        if self.d == 1:
            return (a - b) % self.p
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        if self.d == 1:
            return -a % self.p
        return tuple(-x % self.p for x in a)

    def mul(self, a, b):
        if self.d == 1:
            return a * b % self.p
        d = self.d
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        return self._reduce(prod)

    def smul(self, n: int, a):
        if self.d == 1:
            return n * a % self.p
        return tuple(n * x % self.p for x in a)

    def pow(self, a, e: int):
        if self.d == 1:
            return pow(a, e, self.p)
        if e < 0:
            a, e = self.inv(a), -e
        r = self.one
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        if self.d == 1:
            return pow(a, -1, self.p)
        return self.pow(a, self.q - 2)

    def pth_root(self, a):
        return a if self.d == 1 else self.pow(a, self.p ** (self.d - 1))

    def random(self, rng: random.Random):
        if self.d == 1:
            return rng.randrange(self.p)
        return tuple(rng.randrange(self.p) for _ in range(self.d))

    def elements(self):
        """Every element of the field (small fields only)."""
        if self.d == 1:
            yield from range(self.p)
            return
        for n in range(self.q):
            c = []
            for _ in range(self.d):
                n, r = divmod(n, self.p)
                c.append(r)
            yield tuple(c)


# ---------------------------------------------------------------------------
# polynomial arithmetic over an FqField


def trim(F: FqField, a: list) -> list:
    while a and F.is_zero(a[-1]):
        a.pop()
    return a


def from_ints(F: FqField, coeffs) -> list:
    return trim(F, [F(c) for c in coeffs])


def add(F, a, b):
    n = max(len(a), len(b))
    z = F.zero
    return trim(F, [F.add(a[i] if i < len(a) else z, b[i] if i < len(b) else z) for i in range(n)])


def sub(F, a, b):
    n = max(len(a), len(b))
    z = F.zero
    return trim(F, [F.sub(a[i] if i < len(a) else z, b[i] if i < len(b) else z) for i in range(n)])


def scale(F, a, c):
    return trim(F, [F.mul(c, x) for x in a])


def mul(F, a, b):
    if not a or not b:
        return []
    if F.d == 1:
        p = F.p
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return trim(F, [c % p for c in out])
    out = [F.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if F.is_zero(x):
            continue
        for j, y in enumerate(b):
            out[i + j] = F.add(out[i + j], F.mul(x, y))
    return trim(F, out)


def divmod_(F, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db = len(b) - 1
    inv_lc = F.inv(b[-1])
    if len(a) <= db:
        return [], trim(F, a)
    quo = [F.zero] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if F.is_zero(c):
            continue
        c = F.mul(c, inv_lc)
        quo[i - db] = c
        for j in range(db + 1):
            a[i - db + j] = F.sub(a[i - db + j], F.mul(c, b[j]))
    return trim(F, quo), trim(F, a[:db])


def mod(F, a, b):
    return divmod_(F, a, b)[1]


def monic(F, a):
    if not a:
        return []
    return scale(F, a, F.inv(a[-1]))


def gcd_mod(F, a, b):
    """Monic gcd of two polynomials over F (not both zero)."""
    a, b = trim(F, list(a)), trim(F, list(b))
    if not a and not b:
        raise ValueError("gcd of two zero polynomials")
    while b:
        a, b = b, mod(F, a, b)
    return monic(F, a)


def derivative(F, a):
    return trim(F, [F.smul(i, a[i]) for i in range(1, len(a))])


def mulmod(F, a, b, f):
    if F.d == 1 and len(f) > 1 and f[-1] == 1:
        k = len(f) - 1
        pa = list(a) + [0] * (k - len(a))
        pb = list(b) + [0] * (k - len(b))
        return trim(F, kernels.mulmod(pa, pb, list(f), F.p))
    return mod(F, mul(F, a, b), f)


def powmod(F, base, e: int, f):
    """base^e mod f by square-and-multiply."""
    f = monic(F, f)
    r = [F.one] if len(f) > 1 else []
    base = mod(F, base, f)
    while e:
        if e & 1:
            r = mulmod(F, r, base, f)
        base = mulmod(F, base, base, f)
        e >>= 1
    return r


def pow_x_mod(F, f, e: int):
    """Representative of X^e in F[X]/(f), degree < deg f."""
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    f = monic(F, f)
    if len(f) < 2:
        raise ValueError("modulus must have degree >= 1")
    if F.d == 1:
        return trim(F, kernels.powx_mod(list(f), e, F.p))
    return powmod(F, [F.zero, F.one], e, f)


def count_roots(F, f) -> int:
    """Number of distinct roots of ``f`` in F, as deg gcd(X^q - X, f)."""
    f = monic(F, f)
    if len(f) < 2:
        raise ValueError("count_roots needs degree >= 1")
    xq = pow_x_mod(F, f, F.q)
    return len(gcd_mod(F, f, sub(F, xq, [F.zero, F.one]))) - 1


def squarefree_decomposition(F, f):
    """Pairs (g, i) with f = prod g^i, each g squarefree and monic."""
    f = monic(F, f)
    out = []
    if len(f) < 2:
        return out
    c = gcd_mod(F, f, derivative(F, f))
    w = divmod_(F, f, c)[0]
    i = 1
    while len(w) > 1:
        y = gcd_mod(F, w, c)
        fac = divmod_(F, w, y)[0]
        if len(fac) > 1:
            out.append((monic(F, fac), i))
        w = y
        c = divmod_(F, c, y)[0]
        i += 1
    if len(c) > 1:
        p = F.p
        root = [F.pth_root(c[j]) for j in range(0, len(c), p)]
        for g, j in squarefree_decomposition(F, root):
            out.append((g, j * p))
    return out


def distinct_degree(F, f):
    """Split a squarefree monic f into (product of degree-i factors, i)."""
    out = []
    x = [F.zero, F.one]
    h = x
    i = 0
    while len(f) - 1 >= 2 * (i + 1):
        i += 1
        h = powmod(F, h, F.q, f)
        g = gcd_mod(F, f, sub(F, h, x))
        if len(g) > 1:
            out.append((g, i))
            f = divmod_(F, f, g)[0]
            h = mod(F, h, f)
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def equal_degree(F, f, d: int, rng: random.Random):
    """Cantor-Zassenhaus splitting of a product of degree-d irreducibles."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = trim(F, [F.random(rng) for _ in range(n)])
        if len(a) < 2:
            continue
        if F.p == 2:
            # trace map a + a^2 + ... + a^(2^(m-1)), q^d = 2^m
            m = (F.q.bit_length() - 1) * d
            t, b = a, a
            for _ in range(m - 1):
                t = mulmod(F, t, t, f)
                b = add(F, b, t)
        else:
            b = sub(F, powmod(F, a, (F.q**d - 1) // 2, f), [F.one])
        g = gcd_mod(F, f, b) if b else f
        if 1 < len(g) < len(f):
            return equal_degree(F, g, d, rng) + equal_degree(F, divmod_(F, f, g)[0], d, rng)


def factor_poly_mod(F, g, seed=None):
    """Complete factorization into (monic irreducible, multiplicity), sorted by degree."""
    g = monic(F, trim(F, list(g)))
    if not g:
        raise ValueError("cannot factor the zero polynomial")
    rng = random.Random(seed if seed is not None else f"{F.p}:{F.modulus}:{g}")
    out = []
    for sq, mult in squarefree_decomposition(F, g):
        for part, d in distinct_degree(F, sq):
            for fac in equal_degree(F, part, d, rng):
                out.append((fac, mult))
    out.sort(key=lambda t: (len(t[0]), _key(F, t[0]), t[1]))
    return out


def _key(F, poly):
    return [c if F.d == 1 else tuple(c) for c in poly]


def is_irreducible(F, f) -> bool:
    """Rabin test: f | X^{q^n} - X and gcd(X^{q^{n/r}} - X, f) = 1 for primes r | n."""
    f = monic(F, f)
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    x = [F.zero, F.one]

    def frob_power(m):
        h = x
        for _ in range(m):
            h = powmod(F, h, F.q, f)
        return h

    if sub(F, frob_power(n), x):
        return False
    for r in _prime_divisors(n):
        if len(gcd_mod(F, f, sub(F, frob_power(n // r), x))) > 1:
            return False
    return True


def _prime_divisors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def brute_force_roots(F, f) -> list:
    """Roots by enumeration; a test oracle for small fields."""
    roots = []
    for a in F.elements():
        acc = F.zero
        for c in reversed(f):
            acc = F.add(F.mul(acc, a), c)
        if F.is_zero(acc):
            roots.append(a)
    return roots
