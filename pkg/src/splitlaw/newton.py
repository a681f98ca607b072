"""The power-sum sequence T_n = sum of alpha_i^n over the roots of f.

T satisfies T_{n+k} = a_{k-1} T_{n+k-1} + ... + a_0 T_n where
f = X^k - a_{k-1} X^{k-1} - ... - a_0, i.e. a_i = -c_i for the stored
coefficients c_i.  Terms can be taken exactly, or modulo a residue prime
either by a companion-matrix power or through X^n mod f (the trace route).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import arith, ff
from .nf import MonicPoly, ResiduePrime, reduce_elem


@dataclass(frozen=True)
class NewtonSeq:
    k: int
    a: tuple  # recurrence coefficients a_0 .. a_{k-1}
    initial: tuple  # T_0 .. T_{k-1}
    poly: MonicPoly | None = None

    @classmethod
    def from_poly(cls, f: MonicPoly | list[int]) -> "NewtonSeq":
        if not isinstance(f, MonicPoly):
            f = MonicPoly.over_q(f)
        vals = f.values()
        k = f.k
        return cls(k, tuple(-c for c in vals[:k]), tuple(arith.newton_bootstrap(vals, k)), f)

    def reduce(self, P: ResiduePrime):
        """Recurrence coefficients and initial terms in the residue field."""
        return [reduce_elem(x, P) for x in self.a], [reduce_elem(x, P) for x in self.initial]


def term_exact(seq: NewtonSeq, n: int):
    """T_n by running the recurrence (exact, linear in n)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    k = seq.k
    if n < k:
        return seq.initial[n]
    window = list(seq.initial)
    for _ in range(n - k + 1):
        nxt = window[0] * 0
        for i in range(k):
            nxt = nxt + seq.a[i] * window[i]
        window = window[1:] + [nxt]
    return window[-1]


def terms_exact(seq: NewtonSeq, count: int) -> list:
    out = list(seq.initial[:count])
    while len(out) < count:
        nxt = out[-1] * 0
        for i in range(seq.k):
            nxt = nxt + seq.a[i] * out[len(out) - seq.k + i]
        out.append(nxt)
    return out


def _as_prime(P) -> ResiduePrime:
    if isinstance(P, int):
        from .nf import rational_prime

        return rational_prime(P)
    return P


def _mat_mul(F, A, B):
    n = len(A)
    m = len(B[0])
    out = [[F.zero] * m for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        for t in range(len(B)):
            a = Ai[t]
            if F.is_zero(a):
                continue
            Bt = B[t]
            row = out[i]
            for j in range(m):
                row[j] = F.add(row[j], F.mul(a, Bt[j]))
    return out


def term_mod_matrix(seq: NewtonSeq, n: int, P) -> object:
    """T_n in O_K/P from the n-th power of the k x k companion matrix."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    P = _as_prime(P)
    F = P.field
    a, init = seq.reduce(P)
    k = seq.k
    if n < k:
        return init[n]
    # state (T_j, ..., T_{j+k-1}) -> (T_{j+1}, ..., T_{j+k})
    C = [[F.zero] * k for _ in range(k)]
    for i in range(k - 1):
        C[i][i + 1] = F.one
    C[k - 1] = list(a)
    R = [[F.one if i == j else F.zero for j in range(k)] for i in range(k)]
    e = n
    while e:
        if e & 1:
            R = _mat_mul(F, R, C)
        C = _mat_mul(F, C, C)
        e >>= 1
    state = _mat_mul(F, R, [[t] for t in init])
    return state[0][0]


def term_mod_trace(seq: NewtonSeq, n: int, P, f=None) -> object:
    """T_n in O_K/P as sum c_i T_i where X^n = sum c_i X^i mod f over O_K/P."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    P = _as_prime(P)
    F = P.field
    _, init = seq.reduce(P)
    if n < seq.k:
        return init[n]
    if f is None:
        f = seq.poly.reduce(P)
    return trace_combine(F, ff.pow_x_mod(F, f, n), init)


def trace_combine(F, reduced_power, init):
    acc = F.zero
    for c, t in zip(reduced_power, init):
        if not F.is_zero(c):
            acc = F.add(acc, F.mul(c, t))
    return acc
