# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled mutation kernels on int64 row blocks (n mutable rows by any columns)."""

from libc.stdint cimport int64_t, int8_t

cdef int64_t LIMIT = 2147483648


def mutate_inplace(int64_t[:, ::1] block, Py_ssize_t k):
    """Mutate ``block`` at row/column ``k`` in place.

    Raises OverflowError when an entry leaves the range where int64
    products are still exact.
    """
    cdef Py_ssize_t n = block.shape[0]
    cdef Py_ssize_t m = block.shape[1]
    cdef Py_ssize_t j, c
    cdef int64_t bjk, bkc, v
    cdef bint overflow = False
    if k < 0 or k >= n or k >= m:
        raise IndexError(k)
    for j in range(n):
        if j == k:
            continue
        bjk = block[j, k]
        if bjk == 0:
            continue
        for c in range(m):
            bkc = block[k, c]
            if c == k or bkc == 0:
                continue
            if bjk > 0 and bkc > 0:
                v = block[j, c] + bjk * bkc
            elif bjk < 0 and bkc < 0:
                v = block[j, c] - bjk * bkc
            else:
                continue
            if v > LIMIT or v < -LIMIT:
                overflow = True
            block[j, c] = v
    for c in range(m):
        block[k, c] = -block[k, c]
    for j in range(n):
        block[j, k] = -block[j, k]
    if overflow:
        raise OverflowError("mutation entry exceeds 2**31")


def row_signs(const int64_t[:, ::1] block, Py_ssize_t start, int8_t[::1] out):
    """Classify rows of ``block[:, start:]``: 1 green, -1 red, 0 zero, 2 mixed."""
    cdef Py_ssize_t n = block.shape[0]
    cdef Py_ssize_t m = block.shape[1]
    cdef Py_ssize_t j, c
    cdef bint pos, neg
    cdef int64_t v
    for j in range(n):
        pos = False
        neg = False
        for c in range(start, m):
            v = block[j, c]
            if v > 0:
                pos = True
            elif v < 0:
                neg = True
        if pos and neg:
            out[j] = 2
        elif pos:
            out[j] = 1
        elif neg:
            out[j] = -1
        else:
            out[j] = 0
