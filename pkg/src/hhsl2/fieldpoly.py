"""Prime-field scalars and sparse bigraded polynomials.

Polynomials live in one of two variable sets:

* ``ADJOINT``: variables ``e, h, f`` of weights ``2, 0, -2`` (the symmetric
  algebra on the adjoint module),
* ``NATURAL``: variables ``x, y`` of weights ``1, -1`` (symmetric powers of
  the natural two dimensional module).

Every monomial therefore has a polynomial degree and a weight, and both are
additive under multiplication.  Coefficients of :class:`Poly` are residues mod
``p``; :class:`IntPoly` keeps exact integers so that expressions which are only
divisible by ``p`` over the integers can be formed before reducing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

Monomial = tuple  # tuple of non-negative exponents, one per variable


class TagMismatchError(ValueError):
    """Operands live in different variable sets (or different fields)."""


class NotDivisibleError(ArithmeticError):
    """Exact division by a variable was requested but does not exist."""


class GradingError(ValueError):
    """An operation needing a homogeneous input received something else."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def check_prime(p) -> int:
    """Return ``p`` as an int if it is an odd prime, raise ValueError otherwise."""
    if isinstance(p, bool) or not isinstance(p, int):
        raise ValueError(f"p must be an integer, got {p!r}")
    if p < 3 or not is_prime(p):
        raise ValueError(f"p must be an odd prime (p > 2), got {p}")
    return p


def inv_mod(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError(f"0 has no inverse modulo {p}")
    return pow(a, -1, p)


@dataclass(frozen=True)
class FpScalar:
    """An element of GF(p)."""

    value: int
    p: int

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.p)

    def _coerce(self, other) -> int:
        if isinstance(other, FpScalar):
            if other.p != self.p:
                raise TagMismatchError(f"GF({self.p}) vs GF({other.p})")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpScalar(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpScalar(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpScalar(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpScalar(self.value * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FpScalar(-self.value, self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpScalar(self.value * inv_mod(o, self.p), self.p)

    def __pow__(self, k: int):
        if k < 0:
            return fp_inv(self) ** (-k)
        return FpScalar(pow(self.value, k, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, FpScalar):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return (other - self.value) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value} (mod {self.p})"


def fp_inv(a: FpScalar) -> FpScalar:
    """Multiplicative inverse; raises ZeroDivisionError for zero."""
    return FpScalar(inv_mod(a.value, a.p), a.p)


@dataclass(frozen=True)
class VarSet:
    name: str
    names: tuple
    weights: tuple

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, v) -> int:
        if isinstance(v, int):
            if 0 <= v < self.nvars:
                return v
        elif v in self.names:
            return self.names.index(v)
        raise KeyError(f"{v!r} is not a variable of {self.name}")


ADJOINT = VarSet("adjoint", ("e", "h", "f"), (2, 0, -2))
NATURAL = VarSet("natural", ("x", "y"), (1, -1))


def mono_degree(m: Monomial) -> int:
    return sum(m)


def mono_weight(varset: VarSet, m: Monomial) -> int:
    return sum(a * w for a, w in zip(m, varset.weights))


def monomials_of_degree(varset: VarSet, d: int) -> list:
    """All exponent vectors of total degree ``d``, lex-descending in (e, h, f) / (x, y)."""
    if d < 0:
        return []
    if varset.nvars == 2:
        return [(a, d - a) for a in range(d, -1, -1)]
    out = []
    for a in range(d, -1, -1):
        for b in range(d - a, -1, -1):
            out.append((a, b, d - a - b))
    return out


def monomials_at(varset: VarSet, d: int, w: int) -> list:
    """Lex-descending monomials of degree ``d`` and weight ``w``."""
    if varset.nvars == 2:
        # a - (d - a) = w
        if (d + w) % 2 or abs(w) > d or d < 0:
            return []
        a = (d + w) // 2
        return [(a, d - a)]
    # 2a - 2c = w, a + b + c = d
    if w % 2 or d < 0:
        return []
    k = w // 2
    out = []
    for a in range(d, -1, -1):
        c = a - k
        b = d - a - c
        if c >= 0 and b >= 0:
            out.append((a, b, c))
    return out


def format_monomial(varset: VarSet, m: Monomial) -> str:
    parts = []
    for name, a in zip(varset.names, m):
        if a == 1:
            parts.append(name)
        elif a > 1:
            parts.append(f"{name}^{a}")
    return "*".join(parts) if parts else "1"


class _SparsePoly:
    """Shared machinery; subclasses fix the coefficient ring."""

    __slots__ = ("varset", "terms")

    def __init__(self, varset: VarSet, terms: Mapping | Iterable = ()):
        self.varset = varset
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean = {}
        for m, c in items:
            m = tuple(m)
            if len(m) != varset.nvars:
                raise TagMismatchError(f"monomial {m} does not fit {varset.name}")
            c = self._norm(clean.get(m, 0) + c)
            if c:
                clean[m] = c
            else:
                clean.pop(m, None)
        self.terms = clean

    # subclass hooks
    def _norm(self, c):
        raise NotImplementedError

    def _new(self, terms):
        raise NotImplementedError

    def _check(self, other):
        if type(other) is not type(self):
            raise TagMismatchError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.varset != self.varset:
            raise TagMismatchError(f"{self.varset.name} vs {other.varset.name} variables")

    def _is_scalar(self, other) -> bool:
        return isinstance(other, (int, FpScalar)) and not isinstance(other, bool)

    def _scalar(self, other):
        return int(other)

    def __add__(self, other):
        if self._is_scalar(other):
            other = self._new({(0,) * self.varset.nvars: self._scalar(other)})
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = self._norm(terms.get(m, 0) + c)
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return self._new(terms)

    __radd__ = __add__

    def __neg__(self):
        return self._new({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if self._is_scalar(other):
            return self + (-self._scalar(other))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if self._is_scalar(other):
            s = self._scalar(other)
            return self._new({m: c * s for m, c in self.terms.items()})
        self._check(other)
        out = {}
        norm = self._norm
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = norm(out.get(m, 0) + c1 * c2)
        return self._new(out)

    def __rmul__(self, other):
        if self._is_scalar(other):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = self._new({(0,) * self.varset.nvars: 1})
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if self._is_scalar(other):
            other = self._new({(0,) * self.varset.nvars: self._scalar(other)})
        if type(other) is not type(self):
            return NotImplemented
        return self.varset == other.varset and self.terms == other.terms and self._same_ring(other)

    def _same_ring(self, other) -> bool:
        return True

    def __hash__(self):
        return hash((self.varset.name, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, m: Monomial):
        return self.terms.get(tuple(m), 0)

    def monomials(self) -> list:
        return sorted(self.terms, reverse=True)

    def degrees(self) -> set:
        return {mono_degree(m) for m in self.terms}

    def weights(self) -> set:
        return {mono_weight(self.varset, m) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len({(mono_degree(m), mono_weight(self.varset, m)) for m in self.terms}) <= 1

    def degree(self):
        """Polynomial degree of a homogeneous polynomial (None for zero)."""
        ds = self.degrees()
        if not ds:
            return None
        if len(ds) > 1:
            raise GradingError(f"polynomial has mixed degrees {sorted(ds)}")
        return ds.pop()

    def weight(self):
        ws = self.weights()
        if not ws:
            return None
        if len(ws) > 1:
            raise GradingError(f"polynomial has mixed weights {sorted(ws)}")
        return ws.pop()

    def homogeneous_component(self, d: int, w: int):
        vs = self.varset
        return self._new({m: c for m, c in self.terms.items()
                          if mono_degree(m) == d and mono_weight(vs, m) == w})

    def exact_div_var(self, v):
        """Divide by a single variable; every term must contain it."""
        i = self.varset.index(v)
        out = {}
        for m, c in self.terms.items():
            if m[i] == 0:
                raise NotDivisibleError(
                    f"term {format_monomial(self.varset, m)} is not divisible by {self.varset.names[i]}")
            out[m[:i] + (m[i] - 1,) + m[i + 1:]] = c
        return self._new(out)

    def mul_monomial(self, m: Monomial, c=1):
        return self._new({tuple(a + b for a, b in zip(k, m)): v * c for k, v in self.terms.items()})

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in self.monomials():
            c = self.terms[m]
            mono = format_monomial(self.varset, m)
            if mono == "1":
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)


class Poly(_SparsePoly):
    """Polynomial over GF(p) in one of the two variable sets."""

    __slots__ = ("p",)

    def __init__(self, varset: VarSet, p: int, terms: Mapping | Iterable = ()):
        self.p = p
        super().__init__(varset, terms)

    def _norm(self, c):
        return c % self.p

    def _new(self, terms):
        out = Poly.__new__(Poly)
        out.p = self.p
        out.varset = self.varset
        out.terms = {m: c % self.p for m, c in terms.items() if c % self.p}
        return out

    def _check(self, other):
        super()._check(other)
        if other.p != self.p:
            raise TagMismatchError(f"GF({self.p}) vs GF({other.p})")

    def _scalar(self, other):
        if isinstance(other, FpScalar):
            if other.p != self.p:
                raise TagMismatchError(f"GF({self.p}) vs GF({other.p})")
            return other.value
        return int(other)

    def _same_ring(self, other):
        return self.p == other.p

    def __hash__(self):
        return hash((self.varset.name, self.p, frozenset(self.terms.items())))

    @classmethod
    def zero(cls, varset: VarSet, p: int) -> "Poly":
        return cls(varset, p)

    @classmethod
    def const(cls, varset: VarSet, p: int, c: int = 1) -> "Poly":
        return cls(varset, p, {(0,) * varset.nvars: c})

    @classmethod
    def monomial(cls, varset: VarSet, p: int, m: Monomial, c: int = 1) -> "Poly":
        return cls(varset, p, {tuple(m): c})

    @classmethod
    def var(cls, varset: VarSet, p: int, v) -> "Poly":
        i = varset.index(v)
        m = tuple(1 if j == i else 0 for j in range(varset.nvars))
        return cls(varset, p, {m: 1})

    def to_int(self) -> "IntPoly":
        return IntPoly(self.varset, self.terms)


class IntPoly(_SparsePoly):
    """Polynomial with exact integer coefficients."""

    __slots__ = ()

    def _norm(self, c):
        return c

    def _new(self, terms):
        return IntPoly(self.varset, terms)

    @classmethod
    def var(cls, varset: VarSet, v) -> "IntPoly":
        i = varset.index(v)
        return cls(varset, {tuple(1 if j == i else 0 for j in range(varset.nvars)): 1})

    @classmethod
    def const(cls, varset: VarSet, c: int = 1) -> "IntPoly":
        return cls(varset, {(0,) * varset.nvars: c})

    def reduce(self, p: int) -> Poly:
        return Poly(self.varset, p, self.terms)

    def exact_div_int(self, n: int) -> "IntPoly":
        bad = [m for m, c in self.terms.items() if c % n]
        if bad:
            raise NotDivisibleError(
                f"coefficient of {format_monomial(self.varset, bad[0])} is not divisible by {n}")
        return IntPoly(self.varset, {m: c // n for m, c in self.terms.items()})


def adjoint_gens(p: int) -> tuple:
    """The polynomials ``e, h, f`` over GF(p)."""
    return tuple(Poly.var(ADJOINT, p, v) for v in ADJOINT.names)


def natural_gens(p: int) -> tuple:
    return tuple(Poly.var(NATURAL, p, v) for v in NATURAL.names)


def homogeneous_component(a: _SparsePoly, d: int, w: int):
    return a.homogeneous_component(d, w)


def exact_div_var(a: _SparsePoly, v):
    return a.exact_div_var(v)


def z_lift_s(p: int) -> Poly:
    """``(c^p - 4 (ef)^p - h^{2p}) / p`` computed over the integers, then reduced mod p.

    Here ``c = h^2 + 4ef``.  Every coefficient of the numerator is divisible by
    ``p`` (middle binomials, and ``4^p - 4`` by Fermat), so the quotient is a
    well defined element of degree ``2p`` and weight 0.
    """
    check_prime(p)
    e, h, f = (IntPoly.var(ADJOINT, v) for v in "ehf")
    c = h * h + e * f * 4
    numerator = c ** p - (e * f) ** p * 4 - h ** (2 * p)
    try:
        return numerator.exact_div_int(p).reduce(p)
    except NotDivisibleError as exc:  # pragma: no cover - cannot happen for prime p
        raise ArithmeticError(f"integer lift of s is not divisible by {p}") from exc
