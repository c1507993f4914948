"""The sl2 actions on S = k[e,h,f] and on k[x,y], and the maps between them.

The Lie algebra acts on ``S`` by derivations extending the adjoint action, and
on ``k[x,y]`` by ``e = x d/dy``, ``f = y d/dx``, ``h = x d/dx - y d/dy``.
``phi`` is the module surjection ``S^n -> S^{2n}(L(1))`` whose kernel is
``c S^{n-2}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .fieldpoly import (
    ADJOINT,
    NATURAL,
    GradingError,
    Poly,
    TagMismatchError,
    check_prime,
    inv_mod,
    mono_degree,
    mono_weight,
    monomials_at,
    monomials_of_degree,
)

LIE_BASIS = ("e", "h", "f")
LIE_WEIGHT = {"e": 2, "h": 0, "f": -2}

# [a, b] = coeff * basis element, for basis elements a, b
BRACKET = {
    ("e", "f"): (1, "h"),
    ("f", "e"): (-1, "h"),
    ("h", "e"): (2, "e"),
    ("e", "h"): (-2, "e"),
    ("h", "f"): (-2, "f"),
    ("f", "h"): (2, "f"),
}


def bracket(a: str, b: str):
    """``[a, b]`` as ``(coeff, element)``, or ``None`` when it vanishes."""
    return BRACKET.get((a, b))


def _adjoint_rules():
    # derivation g acting on the variable v gives coeff * (variable target)
    rules = {}
    for g in LIE_BASIS:
        rules[g] = []
        for i, v in enumerate(ADJOINT.names):
            br = bracket(g, v)
            if br is not None:
                rules[g].append((i, br[0], ADJOINT.names.index(br[1])))
    return rules


_ADJ_RULES = _adjoint_rules()


def act_adjoint_monomial(g: str, m: tuple):
    """Adjoint action on one monomial, as a list of ``(monomial, int coeff)``."""
    out = []
    for i, k, j in _ADJ_RULES[g]:
        a = m[i]
        if a == 0:
            continue
        if i == j:
            out.append((m, a * k))
        else:
            mm = list(m)
            mm[i] -= 1
            mm[j] += 1
            out.append((tuple(mm), a * k))
    return out


def act_natural_monomial(g: str, m: tuple):
    a, b = m
    if g == "h":
        return [(m, a - b)] if a != b else []
    if g == "e":
        return [((a + 1, b - 1), b)] if b else []
    if g == "f":
        return [((a - 1, b + 1), a)] if a else []
    raise KeyError(g)


def act_monomial(g: str, varset, m: tuple):
    if varset is ADJOINT or varset == ADJOINT:
        return act_adjoint_monomial(g, m)
    return act_natural_monomial(g, m)


def _act(g: str, a: Poly, varset, rule) -> Poly:
    if a.varset != varset:
        raise TagMismatchError(f"expected {varset.name} variables, got {a.varset.name}")
    if g not in LIE_WEIGHT:
        raise KeyError(f"unknown Lie algebra element {g!r}")
    out = {}
    for m, c in a.terms.items():
        for mm, k in rule(g, m):
            out[mm] = out.get(mm, 0) + c * k
    return Poly(varset, a.p, out)


def act_adjoint(g: str, a: Poly) -> Poly:
    """``g . a`` for ``a`` in S, with ``g`` acting as a derivation."""
    return _act(g, a, ADJOINT, act_adjoint_monomial)


def act_natural(g: str, a: Poly) -> Poly:
    return _act(g, a, NATURAL, act_natural_monomial)


def act(g: str, a: Poly) -> Poly:
    if a.varset == ADJOINT:
        return act_adjoint(g, a)
    return act_natural(g, a)


def casimir(p: int) -> Poly:
    """``c = h^2 + 4ef``."""
    return Poly(ADJOINT, p, {(0, 2, 0): 1, (1, 0, 1): 4})


def mult_by_c(a: Poly) -> Poly:
    return casimir(a.p) * a


def reduce_mod_c(a: Poly, n: int | None = None):
    """Split ``a`` in S^n as ``basic + c * quotient``.

    ``basic`` only involves the monomials ``e^i h^{n-i}``, ``h^n``,
    ``f^i h^{n-i}`` (no monomial contains both e and f).  Obtained by
    substituting ``ef = (c - h^2)/4`` until no mixed monomial is left.
    """
    if a.varset != ADJOINT:
        raise TagMismatchError("reduce_mod_c needs a polynomial in e, h, f")
    degs = a.degrees()
    if len(degs) > 1 or (n is not None and degs and degs != {n}):
        raise GradingError(f"input is not homogeneous of degree {n}: degrees {sorted(degs)}")
    p = a.p
    quarter = inv_mod(4, p)
    basic = {}
    quotient = {}
    work = dict(a.terms)
    while work:
        m, c = work.popitem()
        if c % p == 0:
            continue
        i, j, k = m
        if i == 0 or k == 0:
            basic[m] = (basic.get(m, 0) + c) % p
            continue
        # e^i h^j f^k = e^{i-1} h^j f^{k-1} (c - h^2) / 4
        rest = (i - 1, j, k - 1)
        quotient[rest] = (quotient.get(rest, 0) + c * quarter) % p
        nxt = (i - 1, j + 2, k - 1)
        work[nxt] = (work.get(nxt, 0) - c * quarter) % p
    return Poly(ADJOINT, p, basic), Poly(ADJOINT, p, quotient)


def phi_basic_monomial(m: tuple, p: int):
    """Image of a reduced basis monomial under phi as ``(monomial, coeff)``."""
    i, j, k = m
    n = i + j + k
    if i and k:
        raise GradingError(f"e^{i} h^{j} f^{k} is not a reduced basis monomial")
    if i:
        return (n + i, n - i), inv_mod(pow(-2, i, p), p)
    if k:
        return (n - k, n + k), inv_mod(pow(2, k, p), p)
    return (n, n), 1


def phi_map(n: int, a: Poly) -> Poly:
    """The surjection S^n -> S^{2n}(L(1)).

    Reduces modulo ``c`` and sends ``e^i h^{n-i} -> (-2)^{-i} x^{n+i} y^{n-i}``,
    ``h^n -> x^n y^n``, ``f^i h^{n-i} -> 2^{-i} x^{n-i} y^{n+i}``.
    """
    basic, _ = reduce_mod_c(a, n)
    out = {}
    for m, c in basic.terms.items():
        mm, k = phi_basic_monomial(m, a.p)
        out[mm] = out.get(mm, 0) + c * k
    return Poly(NATURAL, a.p, out)


def phi_substitution(a: Poly) -> Poly:
    """phi as the algebra map ``e -> -x^2/2, h -> xy, f -> y^2/2``.

    Kills ``c`` outright; used as an independent check of :func:`phi_map`.
    """
    p = a.p
    half = inv_mod(2, p)
    e = Poly(NATURAL, p, {(2, 0): -half})
    h = Poly(NATURAL, p, {(1, 1): 1})
    f = Poly(NATURAL, p, {(0, 2): half})
    out = Poly.zero(NATURAL, p)
    for (i, j, k), c in a.terms.items():
        out = out + (e ** i) * (h ** j) * (f ** k) * c
    return out


# --- modules and their graded slices -------------------------------------

@dataclass(frozen=True)
class ModuleSpec:
    """``sym_adjoint`` is S^n, ``sym_natural`` is S^m(L(1)), ``full_s`` is S up to a degree."""

    kind: str
    degree: int

    def __post_init__(self):
        if self.kind not in ("sym_adjoint", "sym_natural", "full_s"):
            raise ValueError(f"unknown module kind {self.kind!r}")
        if self.degree < 0:
            raise ValueError("module degree must be non-negative")

    @property
    def varset(self):
        return NATURAL if self.kind == "sym_natural" else ADJOINT

    def dim(self) -> int:
        if self.kind == "sym_natural":
            return self.degree + 1
        if self.kind == "sym_adjoint":
            return comb(self.degree + 2, 2)
        return sum(comb(d + 2, 2) for d in range(self.degree + 1))

    def graded_pieces(self) -> list:
        """The homogeneous summands, as single-degree ModuleSpecs."""
        if self.kind == "full_s":
            return [SymAdjoint(d) for d in range(self.degree + 1)]
        return [self]

    def monomials(self) -> list:
        if self.kind == "full_s":
            raise GradingError("full_s has no single graded slice; use graded_pieces()")
        return monomials_of_degree(self.varset, self.degree)

    def monomials_at_weight(self, w: int) -> list:
        if self.kind == "full_s":
            raise GradingError("full_s has no single graded slice; use graded_pieces()")
        return monomials_at(self.varset, self.degree, w)

    def max_weight(self) -> int:
        return self.degree * (1 if self.kind == "sym_natural" else 2)

    def __str__(self):
        if self.kind == "sym_adjoint":
            return f"S^{self.degree}"
        if self.kind == "sym_natural":
            return f"S^{self.degree}(L(1))"
        return f"S(deg<={self.degree})"


def SymAdjoint(n: int) -> ModuleSpec:
    return ModuleSpec("sym_adjoint", n)


def SymNatural(m: int) -> ModuleSpec:
    return ModuleSpec("sym_natural", m)


def FullS(bound: int) -> ModuleSpec:
    return ModuleSpec("full_s", bound)


# --- invariants -----------------------------------------------------------

@dataclass(frozen=True, order=True)
class InvariantMonomial:
    """``c^a (e^p)^b1 (h^p)^b2 (f^p)^b3``; ring is "Z" or "Z0"."""

    a: int
    b1: int
    b2: int
    b3: int
    ring: str = "Z"

    def degree(self, p: int) -> int:
        return 2 * self.a + p * (self.b1 + self.b2 + self.b3)

    def weight(self, p: int) -> int:
        return 2 * p * (self.b1 - self.b3)

    def to_poly(self, p: int) -> Poly:
        z0 = Poly.monomial(ADJOINT, p, (p * self.b1, p * self.b2, p * self.b3))
        if self.a == 0:
            return z0
        return casimir(p) ** self.a * z0

    def __str__(self):
        parts = []
        if self.a:
            parts.append("c" if self.a == 1 else f"c^{self.a}")
        for name, b in zip("ehf", (self.b1, self.b2, self.b3)):
            if b:
                parts.append(f"{name}^p" if b == 1 else f"({name}^p)^{b}")
        return "*".join(parts) if parts else "1"


def _z0_exponents(k: int):
    for b1 in range(k, -1, -1):
        for b2 in range(k - b1, -1, -1):
            yield b1, b2, k - b1 - b2


def invariant_monomials(ring: str, d: int, p: int) -> list:
    """Monomial basis of the degree-``d`` part of Z (c-exponent < p) or Z0."""
    check_prime(p)
    if ring not in ("Z", "Z0"):
        raise ValueError(f"ring must be 'Z' or 'Z0', got {ring!r}")
    if d < 0:
        return []
    out = []
    a_range = [0] if ring == "Z0" else range(p)
    for a in a_range:
        rest = d - 2 * a
        if rest < 0 or rest % p:
            continue
        for b in _z0_exponents(rest // p):
            out.append(InvariantMonomial(a, *b, ring=ring))
    return out


def monomial_weight(module: ModuleSpec, m: tuple) -> int:
    return mono_weight(module.varset, m)


def monomial_degree(m: tuple) -> int:
    return mono_degree(m)
