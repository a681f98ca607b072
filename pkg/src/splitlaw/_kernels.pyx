# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled F_p polynomial kernels for primes below 2^32.

Same contract as ``splitlaw._pykernels``; callers check ``p < WORD_LIMIT``.
"""

from libc.stdint cimport uint64_t

WORD_LIMIT = 1 << 32

cdef enum:
    MAXK = 64


cdef void _mulmod(const uint64_t *a, const uint64_t *b, const uint64_t *f,
                  int k, uint64_t p, uint64_t *out) noexcept nogil:
    cdef uint64_t prod[2 * MAXK]
    cdef int i, j
    cdef uint64_t c, ai
    for i in range(2 * k - 1):
        prod[i] = 0
    for i in range(k):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(k):
            prod[i + j] = (prod[i + j] + ai * b[j]) % p
    for i in range(2 * k - 2, k - 1, -1):
        c = prod[i]
        if c == 0:
            continue
        c = p - c
        for j in range(k):
            prod[i - k + j] = (prod[i - k + j] + c * f[j]) % p
    for i in range(k):
        out[i] = prod[i]


cdef void _times_x(uint64_t *a, const uint64_t *f, int k, uint64_t p) noexcept nogil:
    cdef uint64_t top = a[k - 1]
    cdef int j
    for j in range(k - 1, 0, -1):
        a[j] = a[j - 1]
    a[0] = 0
    if top:
        top = p - top
        for j in range(k):
            a[j] = (a[j] + top * f[j]) % p


cdef int _load(object seq, uint64_t *dst, int n) except -1:
    cdef int i
    for i in range(n):
        dst[i] = seq[i]
    return 0


def mulmod(a, b, f, p):
    cdef int k = len(f) - 1
    if k > MAXK or k < 1:
        raise ValueError("degree out of kernel range")
    cdef uint64_t fa[MAXK + 1]
    cdef uint64_t aa[MAXK]
    cdef uint64_t bb[MAXK]
    cdef uint64_t out[MAXK]
    _load(f, fa, k + 1)
    _load(a, aa, k)
    _load(b, bb, k)
    _mulmod(aa, bb, fa, k, p, out)
    return [out[i] for i in range(k)]


def powx_mod(f, e, p):
    """Coefficients of X^e mod (f, p)."""
    cdef int k = len(f) - 1
    if k > MAXK or k < 1:
        raise ValueError("degree out of kernel range")
    cdef uint64_t pp = p
    if k == 1:
        return [pow(-f[0], e, p)]
    cdef uint64_t fa[MAXK + 1]
    cdef uint64_t r[MAXK]
    cdef uint64_t t[MAXK]
    cdef int i
    _load(f, fa, k + 1)
    for i in range(k):
        r[i] = 0
    r[0] = 1
    cdef bytes bits = bin(e)[2:].encode()
    cdef const unsigned char *bp = bits
    cdef Py_ssize_t nb = len(bits), idx
    with nogil:
        for idx in range(nb):
            _mulmod(r, r, fa, k, pp, t)
            for i in range(k):
                r[i] = t[i]
            if bp[idx] == 49:
                _times_x(r, fa, k, pp)
    return [r[i] for i in range(k)]
