"""Row reduction over GF(p) with numpy; fallback when the compiled kernel is absent."""

import numpy as np


def rref_inplace(A: np.ndarray, p: int) -> list:
    """Bring ``A`` (int64, entries in [0, p)) to reduced row echelon form in place.

    Returns the list of pivot columns.
    """
    m, n = A.shape
    r = 0
    pivots = []
    for c in range(n):
        if r >= m:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = pow(int(A[r, c]), -1, p)
        if inv != 1:
            A[r] = A[r] * inv % p
        col = A[:, c].copy()
        col[r] = 0
        rows = np.flatnonzero(col)
        if rows.size:
            A[rows] = (A[rows] - np.outer(col[rows], A[r])) % p
        pivots.append(c)
        r += 1
    return pivots
