"""Bitset primitives shared by the hot kernels.

Rows of adjacency are stored as ``uint64`` words, vertex ``v`` living in word
``v >> 6`` at bit ``v & 63``.  Every primitive exists twice: a scalar-loop
version compiled with numba, and a vectorised numpy version used when numba is
unavailable or ``MISNORMAL_PURE_NUMPY=1`` is set.  The kernels in
:mod:`misnormal._kernels` are written against this small vocabulary so that
the same source runs under both paths.
"""

from __future__ import annotations

import os

import numpy as np

_WANT_NUMBA = os.environ.get("MISNORMAL_PURE_NUMPY", "").strip().lower() not in ("1", "true", "yes")

try:
    if not _WANT_NUMBA:
        raise ImportError("numba disabled by MISNORMAL_PURE_NUMPY")
    import numba
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised through the env flag in a subprocess
    numba = None
    HAVE_NUMBA = False

BACKEND = "numba" if HAVE_NUMBA else "numpy"

ONE = np.uint64(1)
ZERO = np.uint64(0)


if HAVE_NUMBA:

    def jit(fn):
        return njit(cache=True)(fn)

    _M1 = np.uint64(0x5555555555555555)
    _M2 = np.uint64(0x3333333333333333)
    _M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
    _H01 = np.uint64(0x0101010101010101)

    @njit(cache=True, inline="always")
    def popcount64(x):
        x = x - ((x >> np.uint64(1)) & _M1)
        x = (x & _M2) + ((x >> np.uint64(2)) & _M2)
        x = (x + (x >> np.uint64(4))) & _M4
        return int((x * _H01) >> np.uint64(56))

    @njit(cache=True, inline="always")
    def _ctz(x):
        return popcount64((x & (~x + np.uint64(1))) - np.uint64(1))

    @njit(cache=True)
    def count(a):
        c = 0
        for w in range(a.shape[0]):
            c += popcount64(a[w])
        return c

    @njit(cache=True)
    def and_count(a, b):
        c = 0
        for w in range(a.shape[0]):
            c += popcount64(a[w] & b[w])
        return c

    @njit(cache=True)
    def is_empty(a):
        for w in range(a.shape[0]):
            if a[w]:
                return False
        return True

    @njit(cache=True)
    def next_bit(a, start):
        """Smallest set index >= start, or -1."""
        nw = a.shape[0]
        w = start >> 6
        if w >= nw:
            return -1
        x = a[w] & ~((np.uint64(1) << np.uint64(start & 63)) - np.uint64(1))
        while True:
            if x:
                return w * 64 + _ctz(x)
            w += 1
            if w >= nw:
                return -1
            x = a[w]

    @njit(cache=True)
    def first_common(a, b):
        """Smallest index set in both a and b, or -1."""
        for w in range(a.shape[0]):
            x = a[w] & b[w]
            if x:
                return w * 64 + _ctz(x)
        return -1

    @njit(cache=True, inline="always")
    def test_bit(a, v):
        return (a[v >> 6] >> np.uint64(v & 63)) & np.uint64(1) != 0

    @njit(cache=True, inline="always")
    def set_bit(a, v):
        a[v >> 6] |= np.uint64(1) << np.uint64(v & 63)

    @njit(cache=True, inline="always")
    def clear_bit(a, v):
        a[v >> 6] &= ~(np.uint64(1) << np.uint64(v & 63))

else:

    def jit(fn):
        return fn

    def popcount64(x):
        return int(np.bitwise_count(np.uint64(x)))

    def count(a):
        return int(np.bitwise_count(a).sum())

    def and_count(a, b):
        return int(np.bitwise_count(a & b).sum())

    def is_empty(a):
        return not a.any()

    def _lowest(words, offset):
        nz = np.flatnonzero(words)
        if nz.size == 0:
            return -1
        w = int(nz[0])
        x = int(words[w])
        return (offset + w) * 64 + ((x & -x).bit_length() - 1)

    def next_bit(a, start):
        start = int(start)
        w = start >> 6
        if w >= a.shape[0]:
            return -1
        head = int(a[w]) & ~((1 << (start & 63)) - 1)
        if head:
            return w * 64 + ((head & -head).bit_length() - 1)
        return _lowest(a[w + 1 :], w + 1)

    def first_common(a, b):
        return _lowest(a & b, 0)

    def test_bit(a, v):
        v = int(v)
        return bool((int(a[v >> 6]) >> (v & 63)) & 1)

    def set_bit(a, v):
        v = int(v)
        a[v >> 6] |= np.uint64(1 << (v & 63))

    def clear_bit(a, v):
        v = int(v)
        a[v >> 6] &= np.uint64(~(1 << (v & 63)) & 0xFFFFFFFFFFFFFFFF)


def words_for(n: int) -> int:
    return max(1, (n + 63) >> 6)


def int_to_words(bits: int, nwords: int) -> np.ndarray:
    return np.frombuffer(bits.to_bytes(nwords * 8, "little"), dtype="<u8").astype(np.uint64)


def words_to_int(words: np.ndarray) -> int:
    return int.from_bytes(np.ascontiguousarray(words, dtype="<u8").tobytes(), "little")


if HAVE_NUMBA:

    @njit(cache=True)
    def residual_degrees(adj, R, deg):
        """deg[v] = |N(v) & R| for v in R, -1 elsewhere."""
        n = adj.shape[0]
        for v in range(n):
            if test_bit(R, v):
                deg[v] = and_count(adj[v], R)
            else:
                deg[v] = -1

else:

    def residual_degrees(adj, R, deg):
        n = adj.shape[0]
        members = np.zeros(n, dtype=bool)
        idx = np.arange(n)
        members[:] = (R[idx >> 6] >> (idx & 63).astype(np.uint64)) & ONE != 0
        deg[:] = -1
        rows = np.flatnonzero(members)
        if rows.size:
            deg[rows] = np.bitwise_count(adj[rows] & R).sum(axis=1)
