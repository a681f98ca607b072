"""Pure-Python versions of the word-size F_p polynomial kernels.

Polynomials are dense coefficient lists of length ``k`` (degree < k) and
``f`` is monic of degree ``k`` with ``f[k] == 1``; all entries in [0, p).
"""


def mulmod(a, b, f, p):
    k = len(f) - 1
    prod = [0] * (2 * k - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    for i in range(2 * k - 2, k - 1, -1):
        c = prod[i] % p
        if c:
            base = i - k
            for j in range(k):
                prod[base + j] -= c * f[j]
    return [c % p for c in prod[:k]]


def _times_x(a, f, p):
    k = len(f) - 1
    top = a[k - 1]
    out = [0] + a[: k - 1]
    if top:
        for j in range(k):
            out[j] = (out[j] - top * f[j]) % p
    return out


def powx_mod(f, e, p):
    """Coefficients of X^e mod (f, p)."""
    k = len(f) - 1
    if k == 1:
        return [pow(-f[0], e, p)]
    r = [0] * k
    r[0] = 1
    for bit in bin(e)[2:]:
        r = mulmod(r, r, f, p)
        if bit == "1":
            r = _times_x(r, f, p)
    return r
