# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same contract as :mod:`cubeiso._pykernels`."""
import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint64_t, int64_t

from ._pykernels import direction_masks, eligible_mask  # noqa: F401  (shared, pure bookkeeping)

cnp.import_array()

BACKEND = "cython"

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil

cdef uint64_t LO[6]
LO[0] = 0x5555555555555555ULL
LO[1] = 0x3333333333333333ULL
LO[2] = 0x0F0F0F0F0F0F0F0FULL
LO[3] = 0x00FF00FF00FF00FFULL
LO[4] = 0x0000FFFF0000FFFFULL
LO[5] = 0x00000000FFFFFFFFULL


cdef inline Py_ssize_t _nwords(int n) noexcept nogil:
    return 1 if n < 6 else (<Py_ssize_t>1) << (n - 6)


cdef inline uint64_t _tailmask(int n) noexcept nogil:
    if n >= 6:
        return 0xFFFFFFFFFFFFFFFFULL
    return ((<uint64_t>1) << (1 << n)) - 1


cdef object _to_words(object bits, int n):
    cdef Py_ssize_t nw = _nwords(n)
    return np.frombuffer(bits.to_bytes(nw * 8, "little"), dtype=np.uint64).copy()


cdef object _from_words(object arr):
    return int.from_bytes(arr.tobytes(), "little")


cdef void _spread(uint64_t[::1] w, uint64_t[::1] o, int n) noexcept nogil:
    cdef Py_ssize_t nw = w.shape[0], j
    cdef int i
    cdef uint64_t x, lo, s
    cdef Py_ssize_t step
    for i in range(n):
        if i < 6:
            s = (<uint64_t>1) << i
            lo = LO[i]
            for j in range(nw):
                x = w[j]
                o[j] |= ((x & lo) << s) | ((x & ~lo) >> s)
        else:
            step = (<Py_ssize_t>1) << (i - 6)
            for j in range(nw):
                o[j] |= w[j ^ step]


def vertex_boundary(bits, int n):
    words = _to_words(bits, n)
    out = words.copy()
    cdef uint64_t[::1] w = words
    cdef uint64_t[::1] o = out
    cdef Py_ssize_t j
    _spread(w, o, n)
    for j in range(w.shape[0]):
        o[j] &= ~w[j]
    o[0] &= _tailmask(n)
    return _from_words(out)


def neighborhood(bits, int n):
    words = _to_words(bits, n)
    out = words.copy()
    cdef uint64_t[::1] w = words
    cdef uint64_t[::1] o = out
    _spread(w, o, n)
    o[0] &= _tailmask(n)
    return _from_words(out)


def lower_shadow(bits, int n):
    words = _to_words(bits, n)
    out = np.zeros_like(words)
    cdef uint64_t[::1] w = words
    cdef uint64_t[::1] o = out
    cdef Py_ssize_t nw = w.shape[0], j, step
    cdef int i
    cdef uint64_t s, lo
    for i in range(n):
        if i < 6:
            s = (<uint64_t>1) << i
            lo = LO[i]
            for j in range(nw):
                o[j] |= (w[j] & ~lo) >> s
        else:
            step = (<Py_ssize_t>1) << (i - 6)
            for j in range(nw):
                if not (j & step):
                    o[j] |= w[j | step]
    o[0] &= _tailmask(n)
    return _from_words(out)


cdef inline uint64_t _eligible_word(Py_ssize_t j, int n, int64_t u, int64_t v) noexcept nogil:
    """Bits of word j whose vertex x has u inside x and v disjoint from x."""
    cdef uint64_t m = _tailmask(n)
    cdef int i
    for i in range(n if n < 6 else 6):
        if (u >> i) & 1:
            m &= ~LO[i]
        elif (v >> i) & 1:
            m &= LO[i]
    if ((j << 6) & (u >> 6 << 6)) != (u >> 6 << 6) or ((j << 6) & (v >> 6 << 6)) != 0:
        return 0
    return m


cdef inline uint64_t _at(uint64_t[::1] w, Py_ssize_t j, int64_t d) noexcept nogil:
    """Word j of the bitset y with y[x] = w[x + d] (zero outside the cube)."""
    cdef Py_ssize_t nw = w.shape[0]
    cdef Py_ssize_t q = <Py_ssize_t>(d >> 6)
    cdef int r = <int>(d & 63)
    cdef Py_ssize_t a = j + q
    cdef uint64_t lo = 0, hi = 0
    if 0 <= a < nw:
        lo = w[a] >> r
    if r and 0 <= a + 1 < nw:
        hi = w[a + 1] << (64 - r)
    return lo | hi


cdef inline uint64_t _moved_word(uint64_t[::1] w, Py_ssize_t j, int n, int64_t u, int64_t v) noexcept nogil:
    cdef uint64_t e = _eligible_word(j, n, u, v)
    if not e:
        return 0
    return w[j] & e & ~_at(w, j, v - u)


def compress(bits, int n, int64_t u, int64_t v):
    """Apply the (u, v) compression; return (new_bits, number_moved)."""
    words = _to_words(bits, n)
    cdef uint64_t[::1] w = words
    cdef Py_ssize_t nw = w.shape[0], j
    moved = np.zeros(nw, dtype=np.uint64)
    cdef uint64_t[::1] mv = moved
    cdef int64_t c = 0
    with nogil:
        for j in range(nw):
            mv[j] = _moved_word(w, j, n, u, v)
            c += __builtin_popcountll(mv[j])
    if c == 0:
        return bits, 0
    out = np.empty(nw, dtype=np.uint64)
    cdef uint64_t[::1] o = out
    with nogil:
        for j in range(nw):
            o[j] = (w[j] & ~mv[j]) | _at(mv, j, u - v)
        o[0] &= _tailmask(n)
    return _from_words(out), c


def first_effective(bits, int n, us, vs, Py_ssize_t start=0):
    """Index of the first candidate pair (us[j], vs[j]), j >= start, that moves a member."""
    words = _to_words(bits, n)
    cdef uint64_t[::1] w = words
    cdef int64_t[::1] uu = np.ascontiguousarray(us, dtype=np.int64)
    cdef int64_t[::1] vv = np.ascontiguousarray(vs, dtype=np.int64)
    cdef Py_ssize_t c, j, nw = w.shape[0], found = -1
    with nogil:
        for c in range(start, uu.shape[0]):
            for j in range(nw):
                if _moved_word(w, j, n, uu[c], vv[c]):
                    found = c
                    break
            if found >= 0:
                break
    return found


def boundary_sizes(words, int n):
    if n > 6:
        raise ValueError("boundary_sizes packs one family per word; n must be <= 6")
    arr = np.ascontiguousarray(words, dtype=np.uint64)
    cdef uint64_t[::1] x = arr
    out = np.empty(x.shape[0], dtype=np.int64)
    cdef int64_t[::1] o = out
    cdef Py_ssize_t j
    cdef int i
    cdef uint64_t f, nb, lo, s, tail = _tailmask(n)
    with nogil:
        for j in range(x.shape[0]):
            f = x[j]
            nb = f
            for i in range(n):
                s = (<uint64_t>1) << i
                lo = LO[i]
                nb |= ((f & lo) << s) | ((f & ~lo) >> s)
            o[j] = __builtin_popcountll(nb & ~f & tail)
    return out


def union_table(masks):
    """OR of every subfamily: out[S] = OR of masks[j] over bits j of S."""
    arr = np.ascontiguousarray(masks, dtype=np.uint64)
    cdef uint64_t[::1] mk = arr
    cdef Py_ssize_t m = mk.shape[0], j, a, half
    out = np.zeros((<Py_ssize_t>1) << m, dtype=np.uint64)
    cdef uint64_t[::1] o = out
    with nogil:
        for j in range(m):
            half = (<Py_ssize_t>1) << j
            for a in range(half):
                o[half + a] = o[a] | mk[j]
    return out


def popcount(words):
    return np.bitwise_count(np.asarray(words, dtype=np.uint64)).astype(np.int64)
