"""Chevalley-Eilenberg cochains of sl2 with coefficients in graded slices of S and S(L(1)).

A cochain of degree ``n`` is a map from the fixed basis of the n-th exterior
power of sl2 to a module.  The differential preserves polynomial degree and
weight, so everything is computed one *cell* at a time: fixed module degree,
cohomological degree and cochain weight ``wt(a(xi)) - wt(xi)``.

Exterior bases (in this order)::

    0: ()
    1: (e,), (h,), (f,)
    2: (h,f), (e,f), (e,h)
    3: (f,h,e)
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations

import numpy as np

from .fieldpoly import ADJOINT, GradingError, Poly, TagMismatchError, mono_weight
from .linalg import FpMatrix
from .sl2act import (
    LIE_WEIGHT,
    ModuleSpec,
    SymAdjoint,
    SymNatural,
    act,
    act_monomial,
    bracket,
    casimir,
    phi_basic_monomial,
    phi_map,
    reduce_mod_c,
)

LAMBDA = {
    0: ((),),
    1: (("e",), ("h",), ("f",)),
    2: (("h", "f"), ("e", "f"), ("e", "h")),
    3: (("f", "h", "e"),),
}


class NotACocycleError(ValueError):
    """A cocycle was required but the differential does not vanish."""


class CellMismatchError(ValueError):
    pass


def wedge_weight(xi) -> int:
    return sum(LIE_WEIGHT[x] for x in xi)


def _perm_sign(src, dst) -> int:
    """Sign of the permutation taking the sequence ``src`` to ``dst``."""
    perm = [src.index(x) for x in dst]
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def canonical_wedge(xs):
    """``x_1 ^ ... ^ x_k`` as ``(basis index, sign)``; None if it vanishes."""
    xs = tuple(xs)
    if len(set(xs)) != len(xs):
        return None
    for idx, b in enumerate(LAMBDA[len(xs)]):
        if set(b) == set(xs):
            return idx, _perm_sign(xs, b)
    raise KeyError(xs)  # pragma: no cover


@lru_cache(maxsize=None)
def differential_structure(n: int):
    """For each basis element of degree n+1, the terms of ``(d a)(x_1 ^ ... ^ x_{n+1})``.

    ``("act", g, src, sign)`` stands for ``sign * g . a(src)`` and
    ``("br", src, coeff)`` for ``coeff * a(src)``.
    """
    if n + 1 not in LAMBDA:
        return ()
    out = []
    for xs in LAMBDA[n + 1]:
        terms = []
        for i, x in enumerate(xs):
            rest = xs[:i] + xs[i + 1:]
            idx, s = canonical_wedge(rest)
            terms.append(("act", x, idx, (-1) ** i * s))
        for i, j in combinations(range(len(xs)), 2):
            br = bracket(xs[i], xs[j])
            if br is None:
                continue
            k, y = br
            rest = tuple(x for t, x in enumerate(xs) if t not in (i, j))
            cw = canonical_wedge((y,) + rest)
            if cw is None:
                continue
            idx, s = cw
            terms.append(("br", idx, (-1) ** (i + j) * k * s))
        out.append(tuple(terms))
    return tuple(out)


class Cochain:
    """Values of a cochain on the exterior basis of its degree."""

    __slots__ = ("module", "n", "values", "p")

    def __init__(self, module: ModuleSpec, n: int, values, p: int):
        values = tuple(values)
        if n not in LAMBDA:
            raise ValueError(f"cochain degree must be 0..3, got {n}")
        if len(values) != len(LAMBDA[n]):
            raise ValueError(f"degree {n} cochain needs {len(LAMBDA[n])} values")
        for v in values:
            if v.varset != module.varset:
                raise TagMismatchError(f"value in {v.varset.name} variables for module {module}")
            if v.p != p:
                raise TagMismatchError(f"value over GF({v.p}) in a GF({p}) cochain")
            if v.terms and v.degrees() != {module.degree}:
                raise GradingError(f"value {v} does not lie in {module}")
        self.module = module
        self.n = n
        self.values = values
        self.p = p

    @classmethod
    def zero(cls, module: ModuleSpec, n: int, p: int) -> "Cochain":
        return cls(module, n, [Poly(module.varset, p)] * len(LAMBDA[n]), p)

    @classmethod
    def from_values(cls, n: int, values, p: int, module: ModuleSpec | None = None) -> "Cochain":
        """Build from polynomials, inferring the module from their common degree."""
        values = tuple(values)
        if module is None:
            degs = set()
            for v in values:
                degs |= v.degrees()
            if len(degs) > 1:
                raise GradingError(f"values of mixed degrees {sorted(degs)}")
            d = degs.pop() if degs else 0
            varset = values[0].varset
            module = SymAdjoint(d) if varset == ADJOINT else SymNatural(d)
        return cls(module, n, values, p)

    def weight(self):
        ws = set()
        for xi, v in zip(LAMBDA[self.n], self.values):
            for m in v.terms:
                ws.add(mono_weight(v.varset, m) - wedge_weight(xi))
        if not ws:
            return None
        if len(ws) > 1:
            raise GradingError(f"cochain is not weight homogeneous: weights {sorted(ws)}")
        return ws.pop()

    def is_zero(self) -> bool:
        return not any(v.terms for v in self.values)

    def __getitem__(self, xi):
        """Value on a wedge of basis elements given in any order."""
        if isinstance(xi, str):
            xi = (xi,)
        cw = canonical_wedge(xi)
        if cw is None:
            return Poly(self.module.varset, self.p)
        idx, s = cw
        return self.values[idx] * s

    def _compat(self, other: "Cochain"):
        if not isinstance(other, Cochain):
            raise TypeError(f"expected a Cochain, got {type(other).__name__}")
        if other.n != self.n or other.p != self.p:
            raise CellMismatchError("cochains of different degree or field")
        if other.module == self.module:
            return self.module
        if self.is_zero() and other.module.varset == self.module.varset:
            return other.module
        if other.is_zero() and other.module.varset == self.module.varset:
            return self.module
        raise CellMismatchError(f"cochains valued in {self.module} and {other.module}")

    def __add__(self, other):
        module = self._compat(other)
        return Cochain(module, self.n, [a + b for a, b in zip(self.values, other.values)], self.p)

    def __sub__(self, other):
        module = self._compat(other)
        return Cochain(module, self.n, [a - b for a, b in zip(self.values, other.values)], self.p)

    def __neg__(self):
        return Cochain(self.module, self.n, [-v for v in self.values], self.p)

    def __mul__(self, z):
        """Scalar multiple, or product with an element of S (an invariant, typically)."""
        if isinstance(z, Poly):
            if z.is_zero():
                return Cochain.zero(self.module, self.n, self.p)
            d = z.degree()
            module = SymAdjoint(self.module.degree + d)
            return Cochain(module, self.n, [z * v for v in self.values], self.p)
        return Cochain(self.module, self.n, [v * z for v in self.values], self.p)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        if self.n != other.n or self.p != other.p:
            return False
        if self.is_zero() and other.is_zero():
            return True
        return self.module == other.module and self.values == other.values

    __hash__ = None

    def __repr__(self):
        labels = ["^".join(xi) if xi else "1" for xi in LAMBDA[self.n]]
        body = ", ".join(f"{l}: {v!r}" for l, v in zip(labels, self.values))
        return f"Cochain[{self.module}, deg {self.n}]({body})"


def differential(a: Cochain) -> Cochain:
    """The Chevalley-Eilenberg differential of a cochain, computed on polynomials."""
    if a.n == 3:
        raise ValueError("there are no 4-cochains: every 3-cochain is a cocycle")
    out = []
    for terms in differential_structure(a.n):
        v = Poly(a.module.varset, a.p)
        for term in terms:
            if term[0] == "act":
                _, g, src, s = term
                v = v + act(g, a.values[src]) * s
            else:
                _, src, k = term
                v = v + a.values[src] * k
        out.append(v)
    return Cochain(a.module, a.n + 1, out, a.p)


def is_cocycle(a: Cochain) -> bool:
    if a.n == 3:
        return True
    return differential(a).is_zero()


# --- cells ----------------------------------------------------------------

@dataclass(frozen=True)
class GradedCell:
    """Cochains of degree ``n`` and weight ``w`` with values in a single-degree module."""

    p: int
    module: ModuleSpec
    n: int
    w: int

    def __post_init__(self):
        if self.module.kind == "full_s":
            raise GradingError("cells need a single-degree module; split full_s with graded_pieces()")
        if self.n not in LAMBDA:
            raise ValueError(f"cohomological degree must be 0..3, got {self.n}")

    @cached_property
    def slots(self):
        return tuple((xi, tuple(self.module.monomials_at_weight(self.w + wedge_weight(xi))))
                     for xi in LAMBDA[self.n])

    @cached_property
    def offsets(self):
        offs, k = [], 0
        for _, monos in self.slots:
            offs.append(k)
            k += len(monos)
        return tuple(offs)

    @cached_property
    def dim(self) -> int:
        return sum(len(m) for _, m in self.slots)

    @cached_property
    def index(self) -> dict:
        out = {}
        for s, (_, monos) in enumerate(self.slots):
            for j, m in enumerate(monos):
                out[(s, m)] = self.offsets[s] + j
        return out

    def shifted(self, dn: int) -> "GradedCell":
        return GradedCell(self.p, self.module, self.n + dn, self.w)

    def basis_labels(self) -> list:
        from .fieldpoly import format_monomial
        return [("^".join(xi) or "1", format_monomial(self.module.varset, m))
                for xi, monos in self.slots for m in monos]

    def to_vector(self, a: Cochain) -> np.ndarray:
        if a.n != self.n or a.p != self.p:
            raise CellMismatchError("cochain degree/field does not match the cell")
        v = np.zeros(self.dim, dtype=np.int64)
        if a.is_zero():
            return v
        if a.module != self.module:
            raise CellMismatchError(f"cochain valued in {a.module}, cell in {self.module}")
        for s, val in enumerate(a.values):
            for m, c in val.terms.items():
                try:
                    v[self.index[(s, m)]] = c
                except KeyError:
                    raise CellMismatchError(
                        f"cochain has weight {a.weight()}, not the cell weight {self.w}") from None
        return v

    def from_vector(self, v) -> Cochain:
        v = np.asarray(v, dtype=np.int64) % self.p
        vals = []
        for s, (_, monos) in enumerate(self.slots):
            off = self.offsets[s]
            vals.append(Poly(self.module.varset, self.p,
                             {m: int(v[off + j]) for j, m in enumerate(monos) if v[off + j]}))
        return Cochain(self.module, self.n, vals, self.p)

    def __str__(self):
        return f"C^{self.n}({self.module}, w={self.w}, p={self.p})"


def cell_of(a: Cochain) -> GradedCell:
    w = a.weight()
    return GradedCell(a.p, a.module, a.n, 0 if w is None else w)


def cell_weights(module: ModuleSpec) -> list:
    """Cochain weights that can carry nonzero cochains, ascending."""
    top = module.max_weight() + 2
    parity = module.degree % 2 if module.kind == "sym_natural" else 0
    return [w for w in range(-top, top + 1) if (w - parity) % 2 == 0]


@lru_cache(maxsize=None)
def differential_matrix(cell: GradedCell) -> FpMatrix:
    """Matrix of ``d^n`` from ``cell`` to the degree n+1 cell of the same weight.

    In degree 3 the target is zero-dimensional and the zero map is returned.
    """
    if cell.n == 3:
        return FpMatrix.zeros(0, cell.dim, cell.p)
    target = cell.shifted(1)
    M = np.zeros((target.dim, cell.dim), dtype=np.int64)
    structure = differential_structure(cell.n)
    varset = cell.module.varset
    tindex = target.index
    for s, (_, monos) in enumerate(cell.slots):
        for j, m in enumerate(monos):
            col = cell.offsets[s] + j
            for t, terms in enumerate(structure):
                for term in terms:
                    if term[0] == "act":
                        _, g, src, sign = term
                        if src != s:
                            continue
                        for mm, k in act_monomial(g, varset, m):
                            M[tindex[(t, mm)], col] += sign * k
                    else:
                        _, src, k = term
                        if src == s:
                            M[tindex[(t, m)], col] += k
    return FpMatrix(M, cell.p)


@dataclass
class CellCohomology:
    """Cocycles, coboundaries and chosen class representatives of one cell."""

    cell: GradedCell
    cocycles: np.ndarray     # dim x nullity
    boundaries: np.ndarray   # dim x rank(d^{n-1})
    reps: np.ndarray         # dim x dim(H)

    @property
    def dim(self) -> int:
        return self.reps.shape[1]

    @cached_property
    def _coord_matrix(self) -> FpMatrix:
        return FpMatrix(np.concatenate([self.boundaries, self.reps], axis=1), self.cell.p,
                        shape=(self.cell.dim, self.boundaries.shape[1] + self.reps.shape[1]))

    def coordinates(self, v) -> np.ndarray:
        """Coordinates of the class of cocycle ``v`` in the chosen basis."""
        v = np.asarray(v, dtype=np.int64) % self.cell.p
        if (differential_matrix(self.cell) @ v).any():
            raise NotACocycleError(f"vector is not a cocycle in {self.cell}")
        x = self._coord_matrix.solve(v)
        return x[self.boundaries.shape[1]:]

    def contains_boundary(self, v) -> bool:
        return not self.coordinates(v).any()


def _previous_matrix(cell: GradedCell) -> FpMatrix:
    if cell.n == 0:
        return FpMatrix.zeros(cell.dim, 0, cell.p)
    return differential_matrix(cell.shifted(-1))


@lru_cache(maxsize=None)
def cell_cohomology(cell: GradedCell) -> CellCohomology:
    d = differential_matrix(cell)
    dprev = _previous_matrix(cell)
    Z = d.kernel_basis()
    B = dprev.image_basis()
    nb = B.shape[1]
    if Z.shape[1] == nb:
        reps = np.zeros((cell.dim, 0), dtype=np.int64)
    else:
        joint = FpMatrix(np.concatenate([B, Z], axis=1), cell.p, shape=(cell.dim, nb + Z.shape[1]))
        chosen = [c - nb for c in joint.pivots() if c >= nb]
        reps = Z[:, chosen]
    return CellCohomology(cell, Z, B, reps)


def cell_ext_dim(cell: GradedCell) -> int:
    d = differential_matrix(cell)
    return d.nullity() - _previous_matrix(cell).rank()


def ext_dims_by_weight(i: int, module: ModuleSpec, p: int) -> dict:
    """``{w: dim}`` for the cohomology of a single-degree module, all weights."""
    if module.kind == "full_s":
        raise GradingError("use ext_dim for full_s")
    return {w: cell_ext_dim(GradedCell(p, module, i, w)) for w in cell_weights(module)}


def ext_dim(i: int, module: ModuleSpec, p: int, weight: int | None = None) -> int:
    """Dimension of Ext^i(k, module), summed over weights (and degrees for full_s)."""
    if not 0 <= i <= 3:
        return 0
    if weight is not None:
        return sum(cell_ext_dim(GradedCell(p, m, i, weight)) for m in module.graded_pieces())
    return sum(sum(ext_dims_by_weight(i, m, p).values()) for m in module.graded_pieces())


def euler_characteristics(module: ModuleSpec, p: int, w: int):
    """``(sum (-1)^i dim C^i, sum (-1)^i dim H^i)`` for one weight cell."""
    chain = sum((-1) ** i * GradedCell(p, module, i, w).dim for i in range(4))
    homology = sum((-1) ** i * cell_ext_dim(GradedCell(p, module, i, w)) for i in range(4))
    return chain, homology


# --- classes and coboundaries -----------------------------------------------

@dataclass
class CohomologyClass:
    representative: Cochain
    cell: GradedCell

    def __post_init__(self):
        if not is_cocycle(self.representative):
            raise NotACocycleError("a cohomology class needs a cocycle representative")


def cohomology_basis(cell: GradedCell) -> list:
    coh = cell_cohomology(cell)
    return [CohomologyClass(cell.from_vector(coh.reps[:, k]), cell) for k in range(coh.dim)]


def is_coboundary(a: Cochain):
    """A preimage of ``a`` under the differential, or None if ``a`` is not a coboundary."""
    if not is_cocycle(a):
        raise NotACocycleError(f"{a!r} is not a cocycle")
    if a.n == 0:
        return Cochain.zero(a.module, 0, a.p) if a.is_zero() else None
    if a.is_zero():
        return Cochain.zero(a.module, a.n - 1, a.p)
    cell = cell_of(a)
    prev = cell.shifted(-1)
    x = differential_matrix(prev).solve(cell.to_vector(a))
    if x is None:
        return None
    return prev.from_vector(x)


def class_equal(a: CohomologyClass, b: CohomologyClass) -> bool:
    if a.cell != b.cell:
        raise CellMismatchError(f"{a.cell} vs {b.cell}")
    return is_coboundary(a.representative - b.representative) is not None


# --- module maps and induced maps --------------------------------------------

def _check_map_degree(kind: str, n: int):
    if kind == "c" and n < 2:
        raise ValueError("multiplication by c lands in S^n only for n >= 2")
    if kind not in ("c", "phi"):
        raise ValueError(f"map must be 'c' or 'phi', got {kind!r}")


def map_modules(kind: str, n: int):
    """Source and target of the two maps of the short exact sequence at degree n."""
    _check_map_degree(kind, n)
    if kind == "c":
        return SymAdjoint(n - 2), SymAdjoint(n)
    return SymAdjoint(n), SymNatural(2 * n)


def apply_module_map(kind: str, a: Cochain) -> Cochain:
    """Apply ``x c`` or ``phi`` to every value of a cochain (both are module maps)."""
    d = a.module.degree
    if kind == "c":
        c = casimir(a.p)
        return Cochain(SymAdjoint(d + 2), a.n, [c * v for v in a.values], a.p)
    if kind == "phi":
        return Cochain(SymNatural(2 * d), a.n, [phi_map(d, v) for v in a.values], a.p)
    raise ValueError(kind)


def _map_monomial(kind: str, m: tuple, p: int):
    if kind == "c":
        return casimir(p).mul_monomial(m).terms.items()
    basic, _ = reduce_mod_c(Poly(ADJOINT, p, {m: 1}))
    out = {}
    for mm, c in basic.terms.items():
        t, k = phi_basic_monomial(mm, p)
        out[t] = (out.get(t, 0) + c * k) % p
    return out.items()


@lru_cache(maxsize=None)
def cell_map_matrix(kind: str, n: int, i: int, w: int, p: int) -> FpMatrix:
    """Matrix of a module map between the degree-i, weight-w cells of source and target."""
    src_mod, tgt_mod = map_modules(kind, n)
    src = GradedCell(p, src_mod, i, w)
    tgt = GradedCell(p, tgt_mod, i, w)
    M = np.zeros((tgt.dim, src.dim), dtype=np.int64)
    for s, (_, monos) in enumerate(src.slots):
        for j, m in enumerate(monos):
            for mm, c in _map_monomial(kind, m, p):
                M[tgt.index[(s, mm)], src.offsets[s] + j] += c
    return FpMatrix(M, p, shape=(tgt.dim, src.dim))


def induced_map_blocks(i: int, n: int, p: int, kind: str) -> dict:
    """Per-weight matrices of the map induced on Ext^i, in the chosen class bases."""
    src_mod, tgt_mod = map_modules(kind, n)
    blocks = {}
    for w in cell_weights(src_mod):
        src = cell_cohomology(GradedCell(p, src_mod, i, w))
        tgt = cell_cohomology(GradedCell(p, tgt_mod, i, w))
        if src.dim == 0 and tgt.dim == 0:
            continue
        M = cell_map_matrix(kind, n, i, w, p)
        cols = [tgt.coordinates(M @ src.reps[:, k]) for k in range(src.dim)]
        blocks[w] = FpMatrix.from_columns(cols, tgt.dim, p)
    # target weights with no source cells still count toward the cokernel
    for w in cell_weights(tgt_mod):
        if w not in blocks:
            tdim = cell_ext_dim(GradedCell(p, tgt_mod, i, w))
            if tdim:
                blocks[w] = FpMatrix.zeros(tdim, 0, p)
    return dict(sorted(blocks.items()))


def induced_map_on_ext(i: int, n: int, p: int, kind: str) -> FpMatrix:
    """Block-diagonal matrix (weights ascending) of ``Ext^i(source) -> Ext^i(target)``."""
    blocks = induced_map_blocks(i, n, p, kind)
    rows = sum(b.rows for b in blocks.values())
    cols = sum(b.cols for b in blocks.values())
    M = np.zeros((rows, cols), dtype=np.int64)
    r = c = 0
    for b in blocks.values():
        M[r:r + b.rows, c:c + b.cols] = b.a
        r += b.rows
        c += b.cols
    return FpMatrix(M, p, shape=(rows, cols))


def induced_rank(i: int, n: int, p: int, kind: str) -> int:
    return sum(b.rank() for b in induced_map_blocks(i, n, p, kind).values())


def connecting_cokernel_dim(i: int, n: int, p: int) -> int:
    """Codimension of the image of phi_* in Ext^i(k, S^{2n}(L(1))).

    Equals the dimension of the image of the connecting map into Ext^{i+1}(k, S^{n-2}).
    """
    blocks = induced_map_blocks(i, n, p, "phi")
    return sum(b.rows - b.rank() for b in blocks.values())


def c_kernel_dim(i: int, n: int, p: int) -> int:
    """Dimension of the kernel of multiplication by c on Ext^i(k, S^{n-2})."""
    blocks = induced_map_blocks(i, n, p, "c")
    return sum(b.cols - b.rank() for b in blocks.values())
