"""Compare the compiled and numpy row-reduction kernels.

    python3 benchmarks/bench_rref.py --p 7 --sizes 50 100 200
"""

import argparse
import importlib.util
import timeit

import numpy as np

from hhsl2 import linalg
from hhsl2.cecomplex import GradedCell, cell_weights, differential_matrix
from hhsl2.sl2act import SymAdjoint


def random_case(n, p, seed):
    rng = np.random.default_rng(seed)
    return rng.integers(0, p, size=(n, n + n // 2))


def cell_case(p, degree):
    # the largest degree-1 differential matrix of S^degree
    cells = [GradedCell(p, SymAdjoint(degree), 1, w) for w in cell_weights(SymAdjoint(degree))]
    return max((differential_matrix(c).a for c in cells), key=lambda a: a.size)


def bench(a, p, backend, repeat):
    t = timeit.repeat(lambda: linalg.rref(a, p, backend=backend), number=1, repeat=repeat)
    return min(t)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p", type=int, default=7)
    ap.add_argument("--sizes", type=int, nargs="+", default=[50, 100, 200])
    ap.add_argument("--cell-degree", type=int, default=None, help="also time a real cell (default 2p)")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    p = args.p

    cases = [(f"random {n}x{n + n // 2}", random_case(n, p, n)) for n in args.sizes]
    deg = args.cell_degree if args.cell_degree is not None else 2 * p
    a = cell_case(p, deg)
    cases.append((f"d^1 cell of S^{deg} ({a.shape[0]}x{a.shape[1]})", a))

    have_cy = importlib.util.find_spec("hhsl2._rref_cy") is not None

    print(f"p = {p}, default backend = {linalg.BACKEND}")
    print(f"{'case':<40} {'python (s)':>12} {'cython (s)':>12} {'speedup':>9}")
    for name, a in cases:
        t_py = bench(a, p, "python", args.repeat)
        if have_cy:
            t_cy = bench(a, p, "cython", args.repeat)
            r1, r2 = linalg.rref(a, p, "python"), linalg.rref(a, p, "cython")
            assert r1[1] == r2[1] and (r1[0] == r2[0]).all(), "backends disagree"
            print(f"{name:<40} {t_py:>12.5f} {t_cy:>12.5f} {t_py / t_cy:>8.1f}x")
        else:
            print(f"{name:<40} {t_py:>12.5f} {'n/a':>12} {'':>9}")


if __name__ == "__main__":
    main()
