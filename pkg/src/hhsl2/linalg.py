"""Exact matrices over GF(p).

Row reduction is delegated to a compiled kernel when it was built, otherwise
to a numpy implementation with the same contract.  Set ``HHSL2_BACKEND=python``
to force the fallback.
"""

from __future__ import annotations

import os

import numpy as np

from . import _rref_py

if os.environ.get("HHSL2_BACKEND", "").lower() == "python":
    _rref = _rref_py.rref_inplace
    BACKEND = "python"
else:
    try:
        from ._rref_cy import rref_inplace as _rref
        BACKEND = "cython"
    except ImportError:
        _rref = _rref_py.rref_inplace
        BACKEND = "python"


def rref(a: np.ndarray, p: int, backend: str | None = None):
    """Reduced row echelon form of ``a`` mod p; returns ``(R, pivots)``."""
    R = np.ascontiguousarray(np.asarray(a, dtype=np.int64) % p)
    if R.ndim != 2:
        raise ValueError("rref expects a 2-d array")
    if backend == "python":
        piv = _rref_py.rref_inplace(R, p)
    elif backend == "cython":
        from ._rref_cy import rref_inplace
        piv = rref_inplace(R, p)
    else:
        piv = _rref(R, p)
    return R, list(piv)


class FpMatrix:
    """A rows x cols matrix over GF(p) with cached row reduction."""

    def __init__(self, entries, p: int, shape=None):
        a = np.asarray(entries, dtype=np.int64)
        if shape is not None:
            a = a.reshape(shape)
        if a.ndim != 2:
            raise ValueError("FpMatrix needs 2-d entries (pass shape for empty matrices)")
        self.a = a % p
        self.p = p
        self._rref = None

    @classmethod
    def zeros(cls, rows: int, cols: int, p: int) -> "FpMatrix":
        return cls(np.zeros((rows, cols), dtype=np.int64), p)

    @classmethod
    def from_columns(cls, columns, rows: int, p: int) -> "FpMatrix":
        cols = [np.asarray(c, dtype=np.int64) for c in columns]
        if not cols:
            return cls.zeros(rows, 0, p)
        return cls(np.stack(cols, axis=1), p)

    @property
    def shape(self):
        return self.a.shape

    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    def rref(self):
        if self._rref is None:
            self._rref = rref(self.a, self.p)
        return self._rref

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullity(self) -> int:
        return self.cols - self.rank()

    def pivots(self) -> list:
        return self.rref()[1]

    def kernel_basis(self) -> np.ndarray:
        """Columns form a basis of the right null space (shape cols x nullity)."""
        R, piv = self.rref()
        n = self.cols
        pset = set(piv)
        free = [j for j in range(n) if j not in pset]
        K = np.zeros((n, len(free)), dtype=np.int64)
        for k, j in enumerate(free):
            K[j, k] = 1
            for i, pc in enumerate(piv):
                K[pc, k] = (-R[i, j]) % self.p
        return K

    def image_basis(self) -> np.ndarray:
        """The pivot columns of the matrix itself: a basis of its column space."""
        return self.a[:, self.pivots()]

    def solve(self, b):
        """A particular solution ``x`` of ``A x = b``, or None if inconsistent."""
        b = np.asarray(b, dtype=np.int64).reshape(-1) % self.p
        if b.shape[0] != self.rows:
            raise ValueError(f"right-hand side has length {b.shape[0]}, expected {self.rows}")
        aug = np.concatenate([self.a, b[:, None]], axis=1)
        R, piv = rref(aug, self.p)
        if piv and piv[-1] == self.cols:
            return None
        x = np.zeros(self.cols, dtype=np.int64)
        for i, pc in enumerate(piv):
            x[pc] = R[i, self.cols]
        return x

    def __matmul__(self, other):
        if isinstance(other, FpMatrix):
            return FpMatrix(self.a @ other.a, self.p)
        v = np.asarray(other, dtype=np.int64)
        return (self.a @ v) % self.p

    def is_zero(self) -> bool:
        return not self.a.any()

    def __eq__(self, other):
        if not isinstance(other, FpMatrix):
            return NotImplemented
        return self.p == other.p and self.shape == other.shape and bool((self.a == other.a).all())

    __hash__ = None

    def __repr__(self):
        return f"FpMatrix({self.rows}x{self.cols} over GF({self.p}))"


def span_rank(vectors, length: int, p: int) -> int:
    """Rank of a list of vectors of the given length."""
    vs = [np.asarray(v, dtype=np.int64) for v in vectors]
    if not vs:
        return 0
    return FpMatrix(np.stack(vs), p).rank()
