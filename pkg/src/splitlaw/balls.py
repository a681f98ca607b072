"""Complex ball arithmetic on dyadic integers, certified root isolation and
exact reconstruction of integral values.

A :class:`Ball` is a disk with center ``(x + i y) * 2^e`` (Python ints) and
radius ``rm * 2^rx``.  Every operation rounds the center to the ball's
working precision and pushes all rounding error into the radius, so the
true value of any expression stays inside the computed ball.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import mpmath

RAD_BITS = 30
DEFAULT_MAX_BITS = 1 << 20


class PrecisionError(ArithmeticError):
    """The ball is too wide for the requested certification."""


# ---------------------------------------------------------------------------
# nonnegative dyadic magnitudes (m, e) = m * 2^e, kept as upper or lower bounds

ZERO_MAG = (0, 0)


def _mag_up(m: int, e: int) -> tuple[int, int]:
    bl = m.bit_length()
    if bl > RAD_BITS:
        s = bl - RAD_BITS
        return (m >> s) + 1, e + s
    return m, e


def _mag_down(m: int, e: int) -> tuple[int, int]:
    bl = m.bit_length()
    if bl > RAD_BITS:
        s = bl - RAD_BITS
        return m >> s, e + s
    return m, e


def _top(a) -> int:
    return a[0].bit_length() + a[1]


def mag_add(a, b):
    if a[0] == 0:
        return b
    if b[0] == 0:
        return a
    if a[1] < b[1]:
        a, b = b, a
    gap = a[1] - b[1]
    if gap > 2 * RAD_BITS + 8 and _top(b) <= a[1] - RAD_BITS:
        # b < 2^(a[1] - RAD_BITS): one unit at that finer exponent covers it
        return _mag_up((a[0] << RAD_BITS) + 1, a[1] - RAD_BITS)
    return _mag_up((a[0] << gap) + b[0], b[1])


def mag_mul(a, b):
    if a[0] == 0 or b[0] == 0:
        return ZERO_MAG
    return _mag_up(a[0] * b[0], a[1] + b[1])


def mag_cmp(a, b) -> int:
    """Exact comparison of two magnitudes: -1, 0 or 1."""
    if a[0] == 0 or b[0] == 0:
        return (a[0] > 0) - (b[0] > 0)
    ta, tb = _top(a), _top(b)
    if ta != tb:
        return -1 if ta < tb else 1
    if a[1] >= b[1]:
        x, y = a[0] << (a[1] - b[1]), b[0]
    else:
        x, y = a[0], b[0] << (b[1] - a[1])
    return (x > y) - (x < y)


def mag_sub_down(a, b):
    """Lower bound of a - b, or None when it may be <= 0."""
    if mag_cmp(a, b) <= 0:
        return None
    if b[0] == 0:
        return a
    if a[1] - b[1] > 2 * RAD_BITS + 8 and _top(b) <= a[1] - RAD_BITS:
        # b < 2^(a[1] - RAD_BITS): drop one unit at that finer exponent
        return _mag_down((a[0] << RAD_BITS) - 1, a[1] - RAD_BITS)
    e = min(a[1], b[1])
    m = (a[0] << (a[1] - e)) - (b[0] << (b[1] - e))
    return _mag_down(m, e)


def mag_div_up(a, b):
    if b[0] == 0:
        raise ZeroDivisionError("magnitude division by zero")
    if a[0] == 0:
        return ZERO_MAG
    shift = RAD_BITS + 2 + b[0].bit_length()
    return _mag_up((a[0] << shift) // b[0] + 1, a[1] - b[1] - shift)


def mag_from_int(n: int):
    return _mag_up(abs(n), 0)


def mag_log2(a) -> float:
    if a[0] == 0:
        return float("-inf")
    return math.log2(a[0]) + a[1]


def _cabs_bounds(x: int, y: int, e: int):
    """Lower and upper magnitude bounds for |x + i y| * 2^e."""
    ax, ay = abs(x), abs(y)
    bl = max(ax.bit_length(), ay.bit_length())
    s = max(0, bl - 64)
    a, b = ax >> s, ay >> s
    n = a * a + b * b
    r = math.isqrt(n)
    lower = _mag_down(r, e + s)
    if s == 0:
        upper = _mag_up(r if r * r == n else r + 1, e)
    else:
        n = (a + 1) ** 2 + (b + 1) ** 2
        upper = _mag_up(math.isqrt(n) + 1, e + s)
    return lower, upper


# ---------------------------------------------------------------------------


class Ball:
    """Complex disk with dyadic center and radius.

    ``prec == 0`` marks an exact constant that never forces rounding.
    """

    __slots__ = ("x", "y", "e", "rad", "prec")

    def __init__(self, x: int, y: int = 0, e: int = 0, rad=ZERO_MAG, prec: int = 0):
        self.x, self.y, self.e, self.rad, self.prec = x, y, e, rad, prec

    # construction -----------------------------------------------------------

    @classmethod
    def exact(cls, n: int) -> "Ball":
        return cls(n)

    @classmethod
    def from_mpc(cls, z, prec: int, rad=ZERO_MAG) -> "Ball":
        if not isinstance(z, mpmath.mpc):
            with mpmath.workprec(max(prec, 64)):
                z = mpmath.mpc(z)
        # read the raw tuples: mpmath.mpc(z) would round to the global precision
        (xs, xm, xe, _), (ys, ym, ye, _) = z._mpc_
        if xm == 0:
            xe = ye
        if ym == 0:
            ye = xe
        e = min(xe, ye)
        # mantissas may be gmpy2 integers; keep plain ints throughout
        x = int(-xm if xs else xm) << (xe - e)
        y = int(-ym if ys else ym) << (ye - e)
        return _make(x, y, e, rad, prec)

    @classmethod
    def from_float(cls, re: float, im: float = 0.0, radius: float = 0.0, prec: int = 64) -> "Ball":
        rad = ZERO_MAG
        if radius:
            m, ex = math.frexp(radius)
            rad = _mag_up(math.ceil(m * 2**53), ex - 53)
        return cls.from_mpc(mpmath.mpc(re, im), prec, rad)

    # inspection -------------------------------------------------------------

    def mid(self) -> mpmath.mpc:
        """Exact center as an mpmath value (no rounding)."""
        from_man_exp = mpmath.libmp.from_man_exp
        return mpmath.mp.make_mpc((from_man_exp(self.x, self.e), from_man_exp(self.y, self.e)))

    def radius_log2(self) -> float:
        return mag_log2(self.rad)

    def mag_upper(self):
        return mag_add(_cabs_bounds(self.x, self.y, self.e)[1], self.rad)

    def mag_lower(self):
        """Lower bound of |z| over the ball, or None if the ball may contain 0."""
        return mag_sub_down(_cabs_bounds(self.x, self.y, self.e)[0], self.rad)

    def contains_zero(self) -> bool:
        return self.mag_lower() is None

    def overlaps(self, other: "Ball") -> bool:
        d = _center_diff(self, other)
        lo = _cabs_bounds(*d)[0]
        return mag_cmp(lo, mag_add(self.rad, other.rad)) <= 0

    def contains_int(self, n: int) -> bool:
        return self.overlaps(Ball(n))

    def __repr__(self) -> str:
        c = complex(self.mid())
        return f"Ball({c.real:.17g}{c.imag:+.17g}j, rad~2^{self.radius_log2():.1f}, prec={self.prec})"

    # arithmetic -------------------------------------------------------------

    def __neg__(self) -> "Ball":
        return Ball(-self.x, -self.y, self.e, self.rad, self.prec)

    def __add__(self, other) -> "Ball":
        b = _coerce(other)
        if b is NotImplemented:
            return b
        prec = max(self.prec, b.prec)
        x, y, e, extra = _center_add(self, b, prec)
        return _make(x, y, e, mag_add(mag_add(self.rad, b.rad), extra), prec)

    __radd__ = __add__

    def __sub__(self, other) -> "Ball":
        b = _coerce(other)
        if b is NotImplemented:
            return b
        return self + (-b)

    def __rsub__(self, other) -> "Ball":
        return (-self) + other

    def __mul__(self, other) -> "Ball":
        b = _coerce(other)
        if b is NotImplemented:
            return b
        a = self
        x = a.x * b.x - a.y * b.y
        y = a.x * b.y + a.y * b.x
        rad = ZERO_MAG
        if a.rad[0] or b.rad[0]:
            ua = _cabs_bounds(a.x, a.y, a.e)[1]
            ub = _cabs_bounds(b.x, b.y, b.e)[1]
            rad = mag_add(mag_add(mag_mul(ua, b.rad), mag_mul(ub, a.rad)), mag_mul(a.rad, b.rad))
        return _make(x, y, a.e + b.e, rad, max(a.prec, b.prec))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Ball":
        if n < 0:
            return self.inv() ** (-n)
        result, base = Ball(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inv(self, prec: int = 0) -> "Ball":
        lo = self.mag_lower()
        if lo is None:
            raise PrecisionError("inverse of a ball containing zero")
        x, y = self.x, self.y
        if not self.rad[0] and y == 0 and abs(x) & (abs(x) - 1) == 0:
            # exact power of two
            s = abs(x).bit_length() - 1
            return Ball(1 if x > 0 else -1, 0, -self.e - s, ZERO_MAG, self.prec)
        prec = prec or self.prec or 64
        n = x * x + y * y
        w = prec + 2 * max(abs(x).bit_length(), abs(y).bit_length()) + 4
        qx = (x << w) // n
        qy = (-y << w) // n
        e = -w - self.e
        # floor division error is below one unit in each component
        rad = (2, e)
        if self.rad[0]:
            clo = _cabs_bounds(x, y, self.e)[0]
            rad = mag_add(rad, mag_div_up(self.rad, _mag_down(clo[0] * lo[0], clo[1] + lo[1])))
        return _make(qx, qy, e, rad, prec)

    def __truediv__(self, other) -> "Ball":
        b = _coerce(other)
        if b is NotImplemented:
            return b
        return self * b.inv(max(self.prec, b.prec))

    def __rtruediv__(self, other) -> "Ball":
        b = _coerce(other)
        return b * self.inv(max(self.prec, b.prec))

    def conj(self) -> "Ball":
        return Ball(self.x, -self.y, self.e, self.rad, self.prec)


def _exact_mpf(man: int, exp: int) -> mpmath.mpf:
    return mpmath.mp.make_mpf(mpmath.libmp.from_man_exp(man, exp))


def _coerce(v):
    if isinstance(v, Ball):
        return v
    if isinstance(v, int):
        return Ball(v)
    return NotImplemented


def _make(x: int, y: int, e: int, rad, prec: int) -> Ball:
    if prec:
        bits = max(abs(x).bit_length(), abs(y).bit_length())
        if bits > prec:
            s = bits - prec
            x >>= s
            y >>= s
            e += s
            rad = mag_add(rad, (2, e))
    return Ball(x, y, e, rad, prec)


def _center_add(a: Ball, b: Ball, prec: int):
    if a.x == 0 and a.y == 0:
        return b.x, b.y, b.e, ZERO_MAG
    if b.x == 0 and b.y == 0:
        return a.x, a.y, a.e, ZERO_MAG
    if prec:
        ta = max(abs(a.x).bit_length(), abs(a.y).bit_length()) + a.e
        tb = max(abs(b.x).bit_length(), abs(b.y).bit_length()) + b.e
        if ta > tb + prec + 64:
            return a.x, a.y, a.e, _cabs_bounds(b.x, b.y, b.e)[1]
        if tb > ta + prec + 64:
            return b.x, b.y, b.e, _cabs_bounds(a.x, a.y, a.e)[1]
    e = min(a.e, b.e)
    return (a.x << (a.e - e)) + (b.x << (b.e - e)), (a.y << (a.e - e)) + (b.y << (b.e - e)), e, ZERO_MAG


def _center_diff(a: Ball, b: Ball):
    e = min(a.e, b.e)
    return (a.x << (a.e - e)) - (b.x << (b.e - e)), (a.y << (a.e - e)) - (b.y << (b.e - e)), e


def ball_sum(balls) -> Ball:
    acc = Ball(0)
    for b in balls:
        acc = acc + b
    return acc


def ball_prod(balls) -> Ball:
    acc = Ball(1)
    for b in balls:
        acc = acc * b
    return acc


def with_prec(b: Ball, prec: int) -> Ball:
    return _make(b.x, b.y, b.e, b.rad, prec)


def horner(coeffs: Sequence, z: Ball) -> Ball:
    acc = Ball(0)
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


# ---------------------------------------------------------------------------
# integer reconstruction


def reconstruct_integer(b: Ball) -> int:
    """The unique integer inside ``b``.

    Needs radius < 1/4 and |Im| + radius < 1/4; raises PrecisionError otherwise.
    """
    quarter = (1, -2)
    if mag_cmp(b.rad, quarter) >= 0:
        raise PrecisionError(f"radius 2^{b.radius_log2():.1f} too wide for integer rounding")
    im_up = mag_add(_cabs_bounds(0, b.y, b.e)[1], b.rad)
    if mag_cmp(im_up, quarter) >= 0:
        raise PrecisionError("imaginary part not certified below 1/4")
    if b.e >= 0:
        n = b.x << b.e
    else:
        n = (b.x + (1 << (-b.e - 1))) >> (-b.e)
    if not b.contains_int(n):
        raise PrecisionError("no integer inside the ball")
    return int(n)


# ---------------------------------------------------------------------------
# root isolation


@dataclass(frozen=True)
class CertifiedRoots:
    """Pairwise disjoint balls, each holding exactly one root."""

    balls: tuple[Ball, ...]
    prec: int
    min_gap_log2: float

    def __len__(self) -> int:
        return len(self.balls)

    def __iter__(self):
        return iter(self.balls)

    def __getitem__(self, i):
        return self.balls[i]


def _coeff_mid(c, prec):
    if isinstance(c, Ball):
        return c.mid()
    return c  # ints are converted by aberth at its working precision


def _cauchy_radius(cs) -> float:
    return 1.0 + max(float(abs(c)) for c in cs[:-1])


def aberth(cs: list, prec: int, start: list | None = None, maxiter: int = 2000) -> list:
    """Simultaneous Aberth-Ehrlich iteration on a monic polynomial (mpc coefficients)."""
    k = len(cs) - 1
    with mpmath.workprec(prec):
        cs = [mpmath.mpc(c) for c in cs]
        if start is None:
            R = _cauchy_radius(cs)
            start = [
                mpmath.mpc(R * math.cos(2 * math.pi * j / k + 0.4), R * math.sin(2 * math.pi * j / k + 0.4))
                for j in range(k)
            ]
        z = [mpmath.mpc(s) for s in start]
        tol = mpmath.ldexp(1, -prec + 6)
        for _ in range(maxiter):
            worst = mpmath.mpf(0)
            for i in range(k):
                zi = z[i]
                p, dp = cs[k], mpmath.mpc(0)
                for c in reversed(cs[:-1]):
                    dp = dp * zi + p
                    p = p * zi + c
                if p == 0:
                    continue
                w = p / dp if dp != 0 else mpmath.mpc(tol)
                s = mpmath.mpc(0)
                for j in range(k):
                    if j != i:
                        diff = zi - z[j]
                        if diff != 0:
                            s += 1 / diff
                denom = 1 - w * s
                corr = w / denom if denom != 0 else w
                z[i] = zi - corr
                rel = abs(corr) / max(1, abs(zi))
                if rel > worst:
                    worst = rel
            if worst < tol:
                break
        return z


def isolate_roots(coeffs: Sequence, precision_bits: int = 128, max_bits: int = DEFAULT_MAX_BITS) -> CertifiedRoots:
    """Certified disjoint balls around the roots of a monic squarefree polynomial.

    ``coeffs`` are ints or :class:`Ball` values (lowest degree first).  The
    inclusion radius of the approximation ``z_i`` is
    ``k |f(z_i)| / prod_{j != i} |z_i - z_j|``; the precision doubles until
    all disks are pairwise disjoint.
    """
    k = len(coeffs) - 1
    if k < 1:
        raise ValueError("need a polynomial of degree >= 1")
    if coeffs[-1] != 1 and not (isinstance(coeffs[-1], Ball) and coeffs[-1].contains_int(1) and coeffs[-1].rad == ZERO_MAG):
        raise ValueError("isolate_roots expects a monic polynomial")
    prec = max(64, precision_bits)
    approx = None
    while True:
        if prec > max_bits:
            raise PrecisionError(f"root isolation did not certify below {max_bits} bits")
        mids = [_coeff_mid(c, prec) for c in coeffs]
        if approx is None:
            approx = aberth(mids, 64)
        approx = aberth(mids, prec + 16, start=approx, maxiter=200)
        result = _certify(coeffs, approx, prec)
        if result is not None:
            return result
        prec *= 2


def _certify(coeffs, approx, prec) -> CertifiedRoots | None:
    k = len(coeffs) - 1
    centers = [Ball.from_mpc(z, prec) for z in approx]
    exact = [Ball(c.x, c.y, c.e, ZERO_MAG, prec) for c in centers]
    cb = [c if isinstance(c, Ball) else Ball(c) for c in coeffs]
    radii = []
    dist_lower = {}
    for i in range(k):
        val = horner(cb, exact[i])
        num = mag_mul(mag_from_int(k), val.mag_upper())
        den = (1, 0)
        for j in range(k):
            if j == i:
                continue
            key = (min(i, j), max(i, j))
            if key not in dist_lower:
                lo = _cabs_bounds(*_center_diff(exact[i], exact[j]))[0]
                if lo[0] == 0:
                    return None
                dist_lower[key] = lo
            lo = dist_lower[key]
            den = _mag_down(den[0] * lo[0], den[1] + lo[1])
        radii.append(mag_div_up(num, den))
    gap = float("inf")
    for (i, j), lo in dist_lower.items():
        slack = mag_sub_down(lo, mag_add(radii[i], radii[j]))
        if slack is None:
            return None
        gap = min(gap, mag_log2(slack))
    balls = [Ball(c.x, c.y, c.e, r, prec) for c, r in zip(exact, radii)]
    balls.sort(key=_root_order)
    return CertifiedRoots(tuple(balls), prec, gap if k > 1 else float("inf"))


def _root_order(b: Ball):
    z = b.mid()
    # conjugate pairs share a real part; round so they tie and sort by imag
    return (round(float(z.real), 12), float(z.imag))


# ---------------------------------------------------------------------------
# linear algebra for number-field reconstruction


def solve(matrix: list[list[Ball]], rhs: list[Ball]) -> list[Ball]:
    """Gaussian elimination in ball arithmetic with pivoting on certified size."""
    n = len(matrix)
    A = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]
    wp = max(v.prec for row in A for v in row)
    for col in range(n):
        best, best_mag = None, None
        for r in range(col, n):
            lo = A[r][col].mag_lower()
            if lo is not None and (best_mag is None or mag_cmp(lo, best_mag) > 0):
                best, best_mag = r, lo
        if best is None:
            raise PrecisionError("singular or under-resolved ball matrix")
        A[col], A[best] = A[best], A[col]
        inv = A[col][col].inv(wp)
        for r in range(n):
            if r == col:
                continue
            factor = A[r][col] * inv
            if factor.x == 0 and factor.y == 0 and factor.rad[0] == 0:
                continue
            for c in range(col, n + 1):
                A[r][c] = A[r][c] - factor * A[col][c]
        A[col] = [v * inv for v in A[col]]
    return [A[i][n] for i in range(n)]


def reconstruct_nf_element(values: Sequence[Ball], K, thetas: Sequence[Ball]):
    """The element x of Z[theta]/D (D = K.index_bound) with embeddings ``values``.

    Solves the theta-power Vandermonde system in ball arithmetic, rounds the
    D-scaled coordinates, then checks that re-embedding lands in every input
    ball.
    """
    from .nf import NFElem, embed

    m = K.m
    if len(values) != m or len(thetas) != m:
        raise ValueError("need one value per embedding")
    V = []
    for th in thetas:
        row, pw = [], Ball(1)
        for _ in range(m):
            row.append(pw)
            pw = pw * th
        V.append(row)
    sol = solve(V, list(values))
    D = K.index_bound
    coords = [reconstruct_integer(s * D) for s in sol]
    x = NFElem(K, coords, D)
    for v, th in zip(values, thetas):
        if not embed(x, th).overlaps(v):
            raise ArithmeticError("reconstructed element fails the residual check")
    return x
