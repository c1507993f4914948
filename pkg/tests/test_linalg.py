import numpy as np
import pytest

from hhsl2 import linalg
from hhsl2.linalg import FpMatrix, rref, span_rank


def naive_rank(rows, p):
    """Schoolbook elimination on lists, used as an oracle."""
    m = [list(r) for r in rows]
    rank, col = 0, 0
    ncols = len(m[0]) if m else 0
    while rank < len(m) and col < ncols:
        piv = next((i for i in range(rank, len(m)) if m[i][col] % p), None)
        if piv is None:
            col += 1
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], p - 2, p)
        m[rank] = [x * inv % p for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col] % p:
                k = m[i][col]
                m[i] = [(a - k * b) % p for a, b in zip(m[i], m[rank])]
        rank += 1
        col += 1
    return rank


def random_matrix(rng, p, rows, cols, density=0.5):
    a = rng.integers(0, p, size=(rows, cols))
    mask = rng.random((rows, cols)) < density
    return a * mask


@pytest.fixture
def nrng():
    return np.random.default_rng(7)


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_rank_matches_oracle(nrng, p):
    for _ in range(40):
        r, c = nrng.integers(1, 12, size=2)
        a = random_matrix(nrng, p, r, c)
        assert FpMatrix(a, p).rank() == naive_rank(a.tolist(), p)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_backends_agree(nrng, p):
    if linalg.BACKEND != "cython":
        pytest.skip("compiled kernel not built")
    for _ in range(40):
        r, c = nrng.integers(1, 15, size=2)
        a = random_matrix(nrng, p, r, c)
        R1, p1 = rref(a, p, backend="python")
        R2, p2 = rref(a, p, backend="cython")
        assert p1 == p2
        assert (R1 == R2).all()


@pytest.mark.parametrize("p", [3, 5, 7])
def test_kernel_image_solve(nrng, p):
    for _ in range(40):
        r, c = nrng.integers(1, 10, size=2)
        A = FpMatrix(random_matrix(nrng, p, r, c), p)
        K = A.kernel_basis()
        assert K.shape == (c, A.nullity())
        assert not (A @ K).any()
        assert span_rank(list(K.T), c, p) == K.shape[1]
        img = A.image_basis()
        assert img.shape[1] == A.rank()
        x = nrng.integers(0, p, size=c)
        b = A @ x
        sol = A.solve(b)
        assert sol is not None and ((A @ sol - b) % p == 0).all()


def test_solve_inconsistent():
    A = FpMatrix([[1, 0], [0, 0]], 5)
    assert A.solve([0, 1]) is None


def test_empty_shapes():
    Z = FpMatrix.zeros(3, 0, 5)
    assert Z.rank() == 0 and Z.kernel_basis().shape == (0, 0)
    assert FpMatrix.from_columns([], 4, 5).shape == (4, 0)
    assert span_rank([], 3, 5) == 0


def test_rref_is_reduced():
    R, piv = rref([[2, 4, 1], [1, 2, 4]], 5)
    assert piv == [0, 2]
    assert R.tolist() == [[1, 2, 0], [0, 0, 1]]
