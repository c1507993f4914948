# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled row reduction over GF(p)."""

from libc.stdint cimport int64_t


cdef inline int64_t _inv_mod(int64_t a, int64_t p):
    cdef int64_t t = 0, newt = 1, r = p, newr = a, q, tmp
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


def rref_inplace(int64_t[:, ::1] A, int64_t p):
    """Bring ``A`` (entries already in [0, p)) to reduced row echelon form.

    Returns the list of pivot columns.
    """
    cdef Py_ssize_t m = A.shape[0], n = A.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, k, piv, nnz
    cdef int64_t inv, factor, tmp
    cdef int64_t[::1] support
    pivots = []
    if m == 0 or n == 0:
        return pivots
    import numpy as np
    support_arr = np.empty(n, dtype=np.int64)
    support = support_arr
    for c in range(n):
        if r >= m:
            break
        piv = -1
        for i in range(r, m):
            if A[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(c, n):
                tmp = A[r, j]
                A[r, j] = A[piv, j]
                A[piv, j] = tmp
        inv = _inv_mod(A[r, c], p)
        nnz = 0
        for j in range(c, n):
            if A[r, j] != 0:
                if inv != 1:
                    A[r, j] = (A[r, j] * inv) % p
                support[nnz] = j
                nnz += 1
        for i in range(m):
            if i == r:
                continue
            factor = A[i, c]
            if factor == 0:
                continue
            factor = p - factor
            for k in range(nnz):
                j = support[k]
                A[i, j] = (A[i, j] + factor * A[r, j]) % p
        pivots.append(c)
        r += 1
    return pivots
