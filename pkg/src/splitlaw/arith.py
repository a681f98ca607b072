"""Exact integer arithmetic: dense polynomials, resultants, Newton sums,
primality and best-effort factorization.

Polynomials are coefficient lists, lowest degree first: ``[-1, -1, 0, 0, 0, 1]``
is ``x^5 - x - 1``.  Most routines only need ``+``, ``-`` and ``*`` on the
coefficients, so they work unchanged for number-field elements.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import cache
from typing import Callable, Sequence

# ---------------------------------------------------------------------------
# Polynomials


def normalize(f: list) -> list:
    """Strip zero leading coefficients in place and return ``f``."""
    while f and f[-1] == 0:
        f.pop()
    return f


def degree(f: Sequence) -> int:
    return len(f) - 1


def is_monic(f: Sequence) -> bool:
    return len(f) >= 2 and f[-1] == 1


def derivative(f: Sequence) -> list:
    return [i * f[i] for i in range(1, len(f))]


def poly_mul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [a[0] * 0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def poly_eval(f: Sequence, x):
    acc = 0
    for c in reversed(f):
        acc = acc * x + c
    return acc


def elementary_symmetric(f: Sequence) -> list:
    """Return ``[e_1, ..., e_k]`` for monic ``f`` (so ``f = X^k - e_1 X^{k-1} + ...``)."""
    k = degree(f)
    return [(-1) ** j * f[k - j] for j in range(1, k + 1)]


def newton_bootstrap(f: Sequence, count: int) -> list:
    """Power sums ``T_0, ..., T_{count-1}`` of the roots of the monic ``f``.

    >>> newton_bootstrap([-1, -1, 0, 0, 0, 1], 5)
    [5, 0, 0, 0, 4]
    >>> newton_bootstrap([1, 0, 1], 4)
    [2, 0, -2, 0]
    """
    if not is_monic(f):
        raise ValueError("newton_bootstrap needs a monic polynomial of degree >= 1")
    if count < 1:
        raise ValueError("count must be positive")
    k = degree(f)
    zero = f[0] * 0
    T = [zero + k]
    for n in range(1, count):
        acc = zero
        for i in range(1, min(n, k + 1)):
            acc = acc + f[k - i] * T[n - i]
        if n <= k:
            acc = acc + n * f[k - n]
        T.append(-acc)
    return T


def bareiss_det(rows: list[list], exact_div: Callable | None = None):
    """Fraction-free determinant over an integral domain.

    ``exact_div(a, b)`` must divide exactly; integers use ``//``.
    """
    n = len(rows)
    if n == 0:
        return 1
    M = [list(r) for r in rows]
    div = exact_div or (lambda a, b: a // b)
    sign = 1
    prev = None
    for i in range(n - 1):
        if M[i][i] == 0:
            for r in range(i + 1, n):
                if M[r][i] != 0:
                    M[i], M[r] = M[r], M[i]
                    sign = -sign
                    break
            else:
                return M[0][0] * 0
        piv = M[i][i]
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                v = M[r][c] * piv - M[r][i] * M[i][c]
                M[r][c] = v if prev is None else div(v, prev)
        prev = piv
    d = M[n - 1][n - 1]
    return d if sign == 1 else -d


def sylvester(f: Sequence, g: Sequence) -> list[list]:
    m, n = degree(f), degree(g)
    zero = f[0] * 0
    size = m + n
    rows = []
    for i in range(n):
        row = [zero] * size
        for j, c in enumerate(reversed(f)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for j, c in enumerate(reversed(g)):
            row[i + j] = c
        rows.append(row)
    return rows


def resultant(f: Sequence, g: Sequence, exact_div: Callable | None = None):
    """Res(f, g) as the Sylvester determinant.  For monic ``f`` this is
    the product of ``g`` over the roots of ``f``."""
    if not f or not g:
        return 0
    if degree(f) == 0:
        return f[0] ** degree(g)
    if degree(g) == 0:
        return g[0] ** degree(f)
    return bareiss_det(sylvester(f, g), exact_div)


def discriminant(f: Sequence, exact_div: Callable | None = None):
    """Discriminant of a monic polynomial, ``(-1)^{k(k-1)/2} Res(f, f')``.

    >>> discriminant([-1, -1, 0, 0, 0, 1])
    2869
    """
    if not is_monic(f):
        raise ValueError("discriminant expects a monic polynomial")
    k = degree(f)
    if k == 1:
        return f[0] * 0 + 1
    r = resultant(f, derivative(f), exact_div)
    return r if (k * (k - 1) // 2) % 2 == 0 else -r


# ---------------------------------------------------------------------------
# Integers


def exact_sqrt(n: int) -> int | None:
    """Square root of a perfect square, else ``None``."""
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


@cache
def primes_below(bound: int) -> tuple[int, ...]:
    """All primes ``p < bound`` (plain sieve)."""
    if bound < 3:
        return ()
    sieve = bytearray([1]) * bound
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(bound - 1) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, bound, i)))
    return tuple(i for i, v in enumerate(sieve) if v)


_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
# first 13 prime bases are deterministic below this bound
_MR_DETERMINISTIC = 3317044064679887385961981


def _strong_probable_prime(n: int, a: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _jacobi(a: int, n: int) -> int:
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas(n: int) -> bool:
    # Selfridge parameters: first D in 5, -7, 9, -11, ... with (D/n) = -1
    D = 5
    while True:
        j = _jacobi(D, n)
        if j == -1:
            break
        if j == 0 and abs(D) != n:
            return False
        D = -D - 2 if D > 0 else -D + 2
        if D == 13 and exact_sqrt(n) is not None:
            return False
    P, Q = 1, (1 - D) // 4
    d, s = n + 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    inv2 = (n + 1) // 2
    U, V, Qk = 0, 2, 1
    # left-to-right binary ladder on d
    for bit in bin(d)[2:]:
        U, V = U * V % n, (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if bit == "1":
            U, V = (P * U + V) * inv2 % n, (D * U + P * V) * inv2 % n
            Qk = Qk * Q % n
    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if V == 0:
            return True
    return False


def is_prime(n: int) -> bool:
    """Miller-Rabin with deterministic bases below 3.3e24, BPSW above."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    if n < 43 * 43:
        return True
    if n < _MR_DETERMINISTIC:
        return all(_strong_probable_prime(n, a) for a in _SMALL_PRIMES)
    return _strong_probable_prime(n, 2) and _strong_lucas(n)


@dataclass(frozen=True)
class Effort:
    """Budget for :func:`factor_integer`."""

    trial_bound: int = 10**6
    rho_rounds: int = 10
    rho_iterations: int = 10**7
    seed: int = 0


EFFORT_PRESETS = {
    "low": Effort(trial_bound=10**5, rho_rounds=2, rho_iterations=10**5),
    "default": Effort(),
    "high": Effort(trial_bound=10**7, rho_rounds=40, rho_iterations=10**8),
}


@dataclass(frozen=True)
class Factorization:
    """``sign * cofactor * prod(p**e)``; ``cofactor == 1`` means complete."""

    sign: int
    factors: tuple[tuple[int, int], ...]
    cofactor: int = 1

    @property
    def complete(self) -> bool:
        return self.cofactor == 1

    def value(self) -> int:
        v = self.sign * self.cofactor
        for p, e in self.factors:
            v *= p**e
        return v

    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    def __str__(self) -> str:
        parts = [f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors]
        if self.cofactor != 1:
            parts.append(f"C{len(str(self.cofactor))}({self.cofactor})")
        body = " * ".join(parts) or "1"
        return ("-" if self.sign < 0 else "") + body


@cache
def _prime_blocks(bound: int, size: int = 256) -> tuple[tuple[int, tuple[int, ...]], ...]:
    ps = primes_below(bound)
    blocks = []
    for i in range(0, len(ps), size):
        chunk = ps[i : i + size]
        blocks.append((math.prod(chunk), chunk))
    return tuple(blocks)


def _brent(n: int, rng: random.Random, iterations: int) -> int | None:
    """One Pollard-rho round with Brent's cycle finding; a proper factor or None."""
    y, c = rng.randrange(1, n), rng.randrange(1, n)
    m = 128
    g = r = q = 1
    x = ys = y
    done = 0
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
        done += r
        r *= 2
        if g == 1 and done > iterations:
            return None
    if g == n:
        while True:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
            if g > 1:
                break
    return g if 1 < g < n else None


def factor_integer(n: int, effort: Effort | None = None) -> Factorization:
    """Trial division then Pollard-Brent; leftovers go to the cofactor.

    >>> str(factor_integer(2869))
    '19 * 151'
    """
    if n == 0:
        raise ValueError("cannot factor 0")
    effort = effort or Effort()
    sign = -1 if n < 0 else 1
    n = abs(n)
    found: dict[int, int] = {}

    def add(p: int, e: int = 1) -> None:
        found[p] = found.get(p, 0) + e

    for prod, chunk in _prime_blocks(effort.trial_bound):
        if n == 1 or chunk[0] * chunk[0] > n:
            break
        if math.gcd(n, prod) == 1:
            continue
        for p in chunk:
            while n % p == 0:
                n //= p
                add(p)
    cofactor = 1
    rng = random.Random(effort.seed)
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m < effort.trial_bound**2 or is_prime(m):
            # below trial_bound^2 a leftover with no small factor is prime
            add(m)
            continue
        r = exact_sqrt(m)
        if r is not None:
            stack.extend([r, r])
            continue
        d = None
        for _ in range(effort.rho_rounds):
            d = _brent(m, rng, effort.rho_iterations)
            if d:
                break
        if d is None:
            cofactor *= m
        else:
            stack.extend([d, m // d])
    # merge powers that ended up split between found primes and cofactor
    for p in list(found):
        while cofactor % p == 0 and cofactor > 1:
            cofactor //= p
            add(p)
    return Factorization(sign, tuple(sorted(found.items())), cofactor)


def multiply_factors(factors: Sequence[tuple[int, int]], sign: int = 1) -> int:
    return sign * math.prod(p**e for p, e in factors)
