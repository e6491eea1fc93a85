"""Graded-commutative polynomials in time-dependent field variables.

A symbol is either a field variable (base name, bar flag, number of time
derivatives) or a graded constant (a transformation parameter or the coupling
``mu``). Every symbol carries a Z2 x Z2 degree; two symbols pass each other
at the cost of the swap sign of their degrees, and a symbol whose degree has
odd self-pairing squares to zero.

:class:`GPoly` stores a polynomial as a sorted tuple of (monomial, coefficient)
pairs with every monomial in one fixed canonical symbol order, so equality is
structural. All operations return new values; instances are immutable and
hashable.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Sequence, Union

from ..grading import DEG_00, DEG_01, DEG_10, DEG_11, Degree, swap_sign
from ..scalars import GR_ONE, GR_ZERO, GaussianRational

__all__ = [
    "FieldVar",
    "GradedConstant",
    "Symbol",
    "GPoly",
    "DerivativeCapError",
    "deriv_cap",
    "fld",
    "const",
    "num",
    "FIELD_DEGREES",
    "CONSTANT_DEGREES",
    "REAL_FIELDS",
    "CONSTANT_CONJUGATES",
]

FIELD_DEGREES: dict[str, Degree] = {
    "x": DEG_00,
    "z": DEG_11,
    "psi": DEG_10,
    "xi": DEG_01,
    "y": DEG_00,
    "A": DEG_00,
    "F": DEG_11,
    "a": DEG_00,
}

# Fields fixed by conjugation (they equal their own bar).
REAL_FIELDS = frozenset({"y", "A"})

CONSTANT_DEGREES: dict[str, Degree] = {
    "mu": DEG_11,
    "eps10": DEG_10,
    "epsBar10": DEG_10,
    "eps01": DEG_01,
    "epsBar01": DEG_01,
    "eps11": DEG_11,
}

CONSTANT_CONJUGATES: dict[str, str] = {
    "mu": "mu",
    "eps10": "epsBar10",
    "epsBar10": "eps10",
    "eps01": "epsBar01",
    "epsBar01": "eps01",
    "eps11": "eps11",
}

_BASE_ORDER = {b: k for k, b in enumerate(FIELD_DEGREES)}
_CONST_ORDER = {c: k for k, c in enumerate(CONSTANT_DEGREES)}


class DerivativeCapError(Exception):
    """A time derivative would exceed the configured derivative-order cap."""


def deriv_cap() -> int:
    """Maximum derivative order per field symbol (env Z2TK_DERIV_CAP, default 6)."""
    return int(os.environ.get("Z2TK_DERIV_CAP", "6"))


@dataclass(frozen=True, slots=True)
class FieldVar:
    """One time-dependent variable: base name, bar flag, derivative count."""

    base: str
    bar: bool = False
    dots: int = 0

    def __post_init__(self):
        if self.base not in FIELD_DEGREES:
            raise ValueError(f"unknown field base {self.base!r}")
        if self.bar and self.base in REAL_FIELDS:
            raise ValueError(f"{self.base} is real and carries no bar")
        if self.dots < 0:
            raise ValueError("derivative count must be >= 0")

    @property
    def degree(self) -> Degree:
        return FIELD_DEGREES[self.base]

    def sort_key(self) -> tuple:
        return (1, _BASE_ORDER[self.base], self.bar, self.dots)

    def raised(self, by: int = 1) -> "FieldVar":
        if self.dots + by > deriv_cap():
            raise DerivativeCapError(
                f"derivative order {self.dots + by} of {self} exceeds cap {deriv_cap()}"
            )
        return FieldVar(self.base, self.bar, self.dots + by)

    def __str__(self) -> str:
        return "d" * self.dots + self.base + ("bar" if self.bar else "")


@dataclass(frozen=True, slots=True)
class GradedConstant:
    """A time-independent graded symbol (transformation parameter or mu)."""

    name: str

    def __post_init__(self):
        if self.name not in CONSTANT_DEGREES:
            raise ValueError(f"unknown graded constant {self.name!r}")

    @property
    def degree(self) -> Degree:
        return CONSTANT_DEGREES[self.name]

    def sort_key(self) -> tuple:
        return (0, _CONST_ORDER[self.name])

    def __str__(self) -> str:
        return self.name


Symbol = Union[FieldVar, GradedConstant]
Monomial = tuple[Symbol, ...]


def _normalize_monomial(syms: Sequence[Symbol]) -> tuple[int, Monomial] | None:
    """Sort symbols into canonical order; return (sign, monomial) or None if zero."""
    sign = 1
    n = len(syms)
    for i in range(n):
        ki = syms[i].sort_key()
        for j in range(i + 1, n):
            if ki > syms[j].sort_key():
                sign *= swap_sign(syms[i].degree, syms[j].degree)
    ordered = tuple(sorted(syms, key=lambda s: s.sort_key()))
    for a, b in zip(ordered, ordered[1:]):
        if a == b and a.degree.is_self_odd():
            return None
    return sign, ordered


def _monomial_degree(m: Monomial) -> Degree:
    d = DEG_00
    for s in m:
        d = d + s.degree
    return d


def _monomial_key(m: Monomial) -> tuple:
    return (len(m), tuple(s.sort_key() for s in m))


def _coerce(c) -> GaussianRational:
    if isinstance(c, GaussianRational):
        return c
    return GaussianRational.of(c)


@dataclass(frozen=True, slots=True)
class GPoly:
    """A graded polynomial: sorted (monomial, coefficient) pairs, no zeros."""

    terms: tuple[tuple[Monomial, GaussianRational], ...] = ()

    # -- construction ---------------------------------------------------------

    @staticmethod
    def from_terms(pairs: Iterable[tuple[Sequence[Symbol], GaussianRational]]) -> "GPoly":
        acc: dict[Monomial, GaussianRational] = {}
        for syms, coeff in pairs:
            if coeff.is_zero():
                continue
            norm = _normalize_monomial(tuple(syms))
            if norm is None:
                continue
            sign, mono = norm
            c = coeff if sign == 1 else -coeff
            prev = acc.get(mono)
            tot = c if prev is None else prev + c
            if tot.is_zero():
                acc.pop(mono, None)
            else:
                acc[mono] = tot
        ordered = tuple(sorted(acc.items(), key=lambda kv: _monomial_key(kv[0])))
        return GPoly(ordered)

    @staticmethod
    def zero() -> "GPoly":
        return _GP_ZERO

    @staticmethod
    def of_symbol(sym: Symbol) -> "GPoly":
        return GPoly(((tuple([sym]), GR_ONE),))

    @staticmethod
    def of_constant(c) -> "GPoly":
        c = _coerce(c)
        if c.is_zero():
            return _GP_ZERO
        return GPoly((((), c),))

    # -- ring operations ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "GPoly") -> "GPoly":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        return GPoly.from_terms(list(self.terms) + list(other.terms))

    def __sub__(self, other: "GPoly") -> "GPoly":
        return self + (-other)

    def __neg__(self) -> "GPoly":
        return GPoly(tuple((m, -c) for m, c in self.terms))

    def scale(self, c) -> "GPoly":
        c = _coerce(c)
        if c.is_zero():
            return _GP_ZERO
        return GPoly(tuple((m, k * c) for m, k in self.terms))

    def __mul__(self, other: "GPoly") -> "GPoly":
        out = []
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                out.append((m1 + m2, c1 * c2))
        return GPoly.from_terms(out)

    def __rmul__(self, c) -> "GPoly":
        return self.scale(c)

    # -- structure ------------------------------------------------------------

    def is_homogeneous(self, degree: Degree) -> bool:
        return all(_monomial_degree(m) == degree for m, _ in self.terms)

    def homogeneous_degree(self) -> Degree | None:
        """The common degree of all monomials, or None (mixed or zero)."""
        degs = {_monomial_degree(m) for m, _ in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def field_vars(self) -> set[tuple[str, bool]]:
        return {
            (s.base, s.bar)
            for m, _ in self.terms
            for s in m
            if isinstance(s, FieldVar)
        }

    def constants(self) -> set[str]:
        return {s.name for m, _ in self.terms for s in m if isinstance(s, GradedConstant)}

    def max_dots(self, base: str | None = None, bar: bool | None = None) -> int:
        best = 0
        for m, _ in self.terms:
            for s in m:
                if isinstance(s, FieldVar):
                    if base is not None and s.base != base:
                        continue
                    if bar is not None and s.bar != bar:
                        continue
                    best = max(best, s.dots)
        return best

    def has_field_free_term(self) -> bool:
        return any(not any(isinstance(s, FieldVar) for s in m) for m, _ in self.terms)

    # -- calculus -------------------------------------------------------------

    def ddt(self, order: int = 1) -> "GPoly":
        """Time derivative: plain Leibniz rule, graded constants are killed."""
        p = self
        for _ in range(order):
            out = []
            for m, c in p.terms:
                for k, s in enumerate(m):
                    if isinstance(s, FieldVar):
                        out.append((m[:k] + (s.raised(),) + m[k + 1:], c))
            p = GPoly.from_terms(out)
        return p

    def left_derivative(self, var: FieldVar) -> "GPoly":
        """d_left/d(var): commute each occurrence to the front, then remove it."""
        out = []
        for m, c in self.terms:
            for k, s in enumerate(m):
                if s == var:
                    sign = 1
                    for q in m[:k]:
                        sign *= swap_sign(var.degree, q.degree)
                    out.append((m[:k] + m[k + 1:], c if sign == 1 else -c))
        return GPoly.from_terms(out)

    def left_coefficient(self, name: str) -> "GPoly":
        """Coefficient of the constant ``name`` after commuting it to the front.

        Only monomials containing the constant exactly once contribute.
        """
        cdeg = CONSTANT_DEGREES[name]
        out = []
        for m, c in self.terms:
            hits = [k for k, s in enumerate(m) if isinstance(s, GradedConstant) and s.name == name]
            if len(hits) != 1:
                continue
            k = hits[0]
            sign = 1
            for q in m[:k]:
                sign *= swap_sign(cdeg, q.degree)
            out.append((m[:k] + m[k + 1:], c if sign == 1 else -c))
        return GPoly.from_terms(out)

    def conjugate(self) -> "GPoly":
        """Antilinear involution: conjugate coefficients, bar symbols, reverse order."""
        out = []
        for m, c in self.terms:
            syms = []
            for s in reversed(m):
                if isinstance(s, FieldVar):
                    if s.base in REAL_FIELDS:
                        syms.append(s)
                    else:
                        syms.append(FieldVar(s.base, not s.bar, s.dots))
                else:
                    syms.append(GradedConstant(CONSTANT_CONJUGATES[s.name]))
            out.append((tuple(syms), c.conjugate()))
        return GPoly.from_terms(out)

    def substitute_fields(
        self, mapping: Callable[[FieldVar], Union["GPoly", None]]
    ) -> "GPoly":
        """Replace field symbols by equal-degree polynomials (None keeps the symbol)."""
        total = GPoly.zero()
        for m, c in self.terms:
            prod = GPoly.of_constant(c)
            for s in m:
                rep = mapping(s) if isinstance(s, FieldVar) else None
                if rep is None:
                    prod = prod * GPoly.of_symbol(s)
                else:
                    if not rep.is_homogeneous(s.degree):
                        raise ValueError(
                            f"replacement for {s} must be homogeneous of degree {s.degree}"
                        )
                    prod = prod * rep
            total = total + prod
        return total

    def substitute_field(self, base: str, bar: bool, value: "GPoly") -> "GPoly":
        """Replace every derivative of one field by the matching derivative of value."""

        def rule(s: FieldVar) -> GPoly | None:
            if s.base == base and s.bar == bar:
                return value.ddt(s.dots)
            return None

        return self.substitute_fields(rule)

    # -- presentation ---------------------------------------------------------

    def render(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for m, c in self.terms:
            factors = "*".join(str(s) for s in m)
            cs = str(c)
            if not m:
                bits.append(cs)
            elif cs == "1":
                bits.append(factors)
            elif cs == "-1":
                bits.append("-" + factors)
            else:
                bits.append(f"{cs}*{factors}")
        return " + ".join(bits)

    def to_json(self) -> list[dict]:
        out = []
        for m, c in self.terms:
            factors = []
            for s in m:
                if isinstance(s, FieldVar):
                    factors.append(
                        {"kind": "field", "base": s.base, "bar": s.bar, "dots": s.dots}
                    )
                else:
                    factors.append({"kind": "const", "name": s.name})
            out.append({"coeff": str(c), "coeff_quad": c.to_quad(), "factors": factors})
        return out

    def __str__(self) -> str:
        return self.render()


_GP_ZERO = GPoly(())


def fld(base: str, dots: int = 0, bar: bool = False) -> GPoly:
    """Polynomial consisting of one field symbol."""
    return GPoly.of_symbol(FieldVar(base, bar, dots))


@lru_cache(maxsize=None)
def const(name: str) -> GPoly:
    """Polynomial consisting of one graded constant."""
    return GPoly.of_symbol(GradedConstant(name))


def num(c) -> GPoly:
    """Constant polynomial with the given Gaussian-rational value."""
    return GPoly.of_constant(c)
