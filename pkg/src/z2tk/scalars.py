"""Exact scalar arithmetic: Gaussian rationals and bivariate rational functions.

Every matrix entry and polynomial coefficient in this package lives in the
field Q(i)(E, lam): rational functions in the energy symbol ``E`` and the
Casimir eigenvalue symbol ``lam``, with Gaussian-rational coefficients.
All arithmetic is exact (stdlib ``Fraction`` underneath); there is no
floating point anywhere in the package.

Canonical form of a :class:`RationalFunction` is num/den with

* gcd(num, den) == 1 (primitive-PRS gcd, lam treated as the main variable),
* den's lexicographically leading coefficient equal to 1, ordering exponent
  pairs by (degree in E, degree in lam),
* zero represented as 0/1.

Equality of canonical forms is therefore structural equality.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

__all__ = [
    "GaussianRational",
    "BiPoly",
    "RationalFunction",
    "PoleError",
    "GR_ZERO",
    "GR_ONE",
    "GR_I",
    "RF_ZERO",
    "RF_ONE",
    "RF_I",
    "RF_E",
    "RF_LAM",
    "rf_arith",
    "rf_specialize",
    "rf_is_zero",
]

_FracLike = Union[int, Fraction]


@dataclass(frozen=True, slots=True)
class GaussianRational:
    """An element re + im*i of Q(i), both parts exact rationals."""

    re: Fraction
    im: Fraction

    @staticmethod
    def of(re: _FracLike = 0, im: _FracLike = 0) -> "GaussianRational":
        return GaussianRational(Fraction(re), Fraction(im))

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def __add__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def inverse(self) -> "GaussianRational":
        n = self.re * self.re + self.im * self.im
        if not n:
            raise ZeroDivisionError("inverse of 0 in Q(i)")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other: "GaussianRational") -> "GaussianRational":
        return self * other.inverse()

    @staticmethod
    def zero() -> "GaussianRational":
        return GR_ZERO

    @staticmethod
    def one() -> "GaussianRational":
        return GR_ONE

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        if self.re:
            parts.append(str(self.re))
        if self.im:
            if self.im == 1:
                s = "i"
            elif self.im == -1:
                s = "-i"
            else:
                s = f"{self.im}*i"
            if parts and not s.startswith("-"):
                parts.append("+" + s)
            else:
                parts.append(s)
        return "".join(parts)

    def to_quad(self) -> list[int]:
        """[re_num, re_den, im_num, im_den] integer quadruple."""
        return [
            self.re.numerator,
            self.re.denominator,
            self.im.numerator,
            self.im.denominator,
        ]

    @staticmethod
    def from_quad(q: Sequence[int]) -> "GaussianRational":
        return GaussianRational(Fraction(q[0], q[1]), Fraction(q[2], q[3]))


GR_ZERO = GaussianRational.of(0)
GR_ONE = GaussianRational.of(1)
GR_I = GaussianRational.of(0, 1)

# Exponent pairs are (degree in E, degree in lam); lexicographic order on
# these pairs fixes "leading term" everywhere below.
_Expt = tuple[int, int]


class BiPoly:
    """Polynomial in E and lam over Q(i), stored as {(degE, degLam): coeff}.

    Instances are treated as immutable; every operation returns a new value.
    Zero coefficients are never stored.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[_Expt, GaussianRational] | None = None):
        clean: dict[_Expt, GaussianRational] = {}
        if terms:
            for k, c in terms.items():
                if not c.is_zero():
                    clean[(int(k[0]), int(k[1]))] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("BiPoly is immutable")

    @staticmethod
    def zero() -> "BiPoly":
        return _BP_ZERO

    @staticmethod
    def one() -> "BiPoly":
        return _BP_ONE

    @staticmethod
    def const(c: GaussianRational) -> "BiPoly":
        return BiPoly({(0, 0): c})

    @staticmethod
    def var_E() -> "BiPoly":
        return BiPoly({(1, 0): GR_ONE})

    @staticmethod
    def var_lam() -> "BiPoly":
        return BiPoly({(0, 1): GR_ONE})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, BiPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "BiPoly") -> "BiPoly":
        t = dict(self.terms)
        for k, c in other.terms.items():
            s = t.get(k)
            t[k] = c if s is None else s + c
        return BiPoly(t)

    def __neg__(self) -> "BiPoly":
        return BiPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        return self + (-other)

    def __mul__(self, other: "BiPoly") -> "BiPoly":
        t: dict[_Expt, GaussianRational] = {}
        for (e1, l1), c1 in self.terms.items():
            for (e2, l2), c2 in other.terms.items():
                k = (e1 + e2, l1 + l2)
                p = c1 * c2
                s = t.get(k)
                t[k] = p if s is None else s + p
        return BiPoly(t)

    def scale(self, c: GaussianRational) -> "BiPoly":
        if c.is_zero():
            return _BP_ZERO
        return BiPoly({k: v * c for k, v in self.terms.items()})

    def leading(self) -> tuple[_Expt, GaussianRational]:
        """Lexicographically last (degE, degLam) exponent pair and its coefficient."""
        if not self.terms:
            raise ValueError("leading term of zero polynomial")
        k = max(self.terms)
        return k, self.terms[k]

    def eval(self, e0: GaussianRational, l0: GaussianRational) -> GaussianRational:
        acc = GR_ZERO
        for (de, dl), c in self.terms.items():
            v = c
            for _ in range(de):
                v = v * e0
            for _ in range(dl):
                v = v * l0
            acc = acc + v
        return acc

    def subst_lam(self, q: "BiPoly") -> "BiPoly":
        """Substitute lam := q(E, lam)."""
        acc = _BP_ZERO
        for (de, dl), c in self.terms.items():
            term = BiPoly({(de, 0): c})
            for _ in range(dl):
                term = term * q
            acc = acc + term
        return acc

    def deg_lam(self) -> int:
        return max((k[1] for k in self.terms), default=-1)

    def lam_coeff(self, d: int) -> "BiPoly":
        """Coefficient of lam**d, a polynomial in E alone."""
        return BiPoly({(k[0], 0): c for k, c in self.terms.items() if k[1] == d})

    def shift_lam(self, d: int) -> "BiPoly":
        return BiPoly({(k[0], k[1] + d): c for k, c in self.terms.items()})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for (de, dl) in sorted(self.terms, reverse=True):
            c = self.terms[(de, dl)]
            factors = []
            cs = str(c)
            if de:
                factors.append("E" if de == 1 else f"E^{de}")
            if dl:
                factors.append("lam" if dl == 1 else f"lam^{dl}")
            if not factors:
                bits.append(cs)
            elif cs == "1":
                bits.append("*".join(factors))
            elif cs == "-1":
                bits.append("-" + "*".join(factors))
            else:
                head = cs if ("+" not in cs[1:] and "-" not in cs[1:]) else f"({cs})"
                bits.append(head + "*" + "*".join(factors))
        out = bits[0]
        for b in bits[1:]:
            out += ("+" + b) if not b.startswith("-") else b
        return out


_BP_ZERO = BiPoly()
_BP_ONE = BiPoly({(0, 0): GR_ONE})


def _divexact(a: BiPoly, b: BiPoly) -> BiPoly:
    """Exact multivariate division a/b; raises if b does not divide a."""
    if b.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    q: dict[_Expt, GaussianRational] = {}
    r = a
    (be, bl), bc = b.leading()
    while not r.is_zero():
        (re_, rl), rc = r.leading()
        de, dl = re_ - be, rl - bl
        if de < 0 or dl < 0:
            raise ArithmeticError("inexact polynomial division")
        qc = rc / bc
        q[(de, dl)] = qc
        r = r - b * BiPoly({(de, dl): qc})
    return BiPoly(q)


def _gcd_uni_E(a: BiPoly, b: BiPoly) -> BiPoly:
    """Monic gcd of two polynomials in E alone (Euclid over the field Q(i))."""
    while not b.is_zero():
        # univariate remainder in E
        r = a
        (bd, _), bc = b.leading()
        while not r.is_zero() and r.leading()[0][0] >= bd:
            (rd, _), rc = r.leading()
            r = r - b * BiPoly({(rd - bd, 0): rc / bc})
        a, b = b, r
    if a.is_zero():
        return a
    _, lc = a.leading()
    return a.scale(lc.inverse())


def _content_E(a: BiPoly) -> BiPoly:
    """gcd over Q(i)[E] of the lam-coefficients of a (monic)."""
    g = _BP_ZERO
    for d in range(a.deg_lam() + 1):
        c = a.lam_coeff(d)
        if not c.is_zero():
            g = _gcd_uni_E(g, c) if not g.is_zero() else _gcd_uni_E(c, _BP_ZERO)
        if g == _BP_ONE:
            break
    return g


def _prem_lam(a: BiPoly, b: BiPoly) -> BiPoly:
    """Pseudo-remainder of a by b, viewed as polynomials in lam over Q(i)[E]."""
    db = b.deg_lam()
    lcb = b.lam_coeff(db)
    r = a
    while not r.is_zero() and r.deg_lam() >= db:
        dr = r.deg_lam()
        lcr = r.lam_coeff(dr)
        r = r * lcb - b.shift_lam(dr - db) * lcr
    return r


def _gcd_bipoly(a: BiPoly, b: BiPoly) -> BiPoly:
    """gcd in Q(i)[E, lam], normalized so the lex-leading coefficient is 1.

    Primitive PRS with lam as the main variable and contents over Q(i)[E].
    """
    if a.is_zero():
        g = b
    elif b.is_zero():
        g = a
    else:
        ca, cb = _content_E(a), _content_E(b)
        cont = _gcd_uni_E(ca, cb)
        pa, pb = _divexact(a, ca), _divexact(b, cb)
        if pa.deg_lam() < pb.deg_lam():
            pa, pb = pb, pa
        while not pb.is_zero():
            if pb.deg_lam() == 0:
                # primitive and lam-free => unit
                pa = _BP_ONE
                break
            r = _prem_lam(pa, pb)
            if not r.is_zero():
                r = _divexact(r, _content_E(r))
            pa, pb = pb, r
        g = cont * pa
    if g.is_zero():
        return g
    _, lc = g.leading()
    return g.scale(lc.inverse())


class PoleError(ZeroDivisionError):
    """A specialization hit a vanishing denominator."""

    def __init__(self, den: BiPoly, where: str):
        self.den = den
        self.where = where
        super().__init__(f"denominator {den} vanishes at {where}")


class RationalFunction:
    """Element of Q(i)(E, lam) in canonical form (see module docstring)."""

    __slots__ = ("num", "den")

    def __init__(self, num: BiPoly, den: BiPoly):
        # assumes already canonical; use make() for arbitrary inputs
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("RationalFunction is immutable")

    @staticmethod
    def make(num: BiPoly, den: BiPoly) -> "RationalFunction":
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            return RF_ZERO
        g = _gcd_bipoly(num, den)
        if not g == _BP_ONE:
            num = _divexact(num, g)
            den = _divexact(den, g)
        _, lc = den.leading()
        if not lc == GR_ONE:
            inv = lc.inverse()
            num = num.scale(inv)
            den = den.scale(inv)
        return RationalFunction(num, den)

    # -- constructors ------------------------------------------------------
    @staticmethod
    def from_poly(p: BiPoly) -> "RationalFunction":
        return RationalFunction.make(p, _BP_ONE)

    @staticmethod
    def const(c: GaussianRational) -> "RationalFunction":
        return RationalFunction.make(BiPoly.const(c), _BP_ONE)

    @staticmethod
    def of(re: _FracLike = 0, im: _FracLike = 0) -> "RationalFunction":
        return RationalFunction.const(GaussianRational.of(re, im))

    @staticmethod
    def zero() -> "RationalFunction":
        return RF_ZERO

    @staticmethod
    def one() -> "RationalFunction":
        return RF_ONE

    # -- predicates --------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.terms.keys() <= {(0, 0)} and self.den == _BP_ONE

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RationalFunction)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        return RationalFunction.make(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __sub__(self, other: "RationalFunction") -> "RationalFunction":
        return self + (-other)

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        if self.is_zero() or other.is_zero():
            return RF_ZERO
        return RationalFunction.make(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "RationalFunction") -> "RationalFunction":
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        if self.is_zero():
            return RF_ZERO
        return RationalFunction.make(self.num * other.den, self.den * other.num)

    def conjugate_coeffs(self) -> "RationalFunction":
        """Complex-conjugate every coefficient (E, lam stay fixed)."""
        cn = BiPoly({k: c.conjugate() for k, c in self.num.terms.items()})
        cd = BiPoly({k: c.conjugate() for k, c in self.den.terms.items()})
        return RationalFunction.make(cn, cd)

    # -- specialization ----------------------------------------------------
    def specialize(
        self, e0: GaussianRational, l0: GaussianRational
    ) -> GaussianRational:
        dv = self.den.eval(e0, l0)
        if dv.is_zero():
            raise PoleError(self.den, f"(E, lam) = ({e0}, {l0})")
        return self.num.eval(e0, l0) / dv

    def subst_lam(self, q: BiPoly) -> "RationalFunction":
        """Substitute lam := q (a polynomial); raises if the denominator collapses."""
        den = self.den.subst_lam(q)
        if den.is_zero():
            raise PoleError(self.den, f"lam := {q}")
        return RationalFunction.make(self.num.subst_lam(q), den)

    # -- serialization -----------------------------------------------------
    def to_json(self) -> dict:
        def poly(p: BiPoly) -> list:
            return [
                [k[0], k[1], p.terms[k].to_quad()] for k in sorted(p.terms)
            ]

        return {"num": poly(self.num), "den": poly(self.den)}

    @staticmethod
    def from_json(obj: Mapping) -> "RationalFunction":
        def poly(rows: Iterable) -> BiPoly:
            return BiPoly(
                {(r[0], r[1]): GaussianRational.from_quad(r[2]) for r in rows}
            )

        return RationalFunction.make(poly(obj["num"]), poly(obj["den"]))

    def __str__(self) -> str:
        if self.den == _BP_ONE:
            return str(self.num)
        ns = str(self.num)
        if len(self.num.terms) > 1:
            ns = f"({ns})"
        ds = str(self.den)
        if len(self.den.terms) > 1:
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def __repr__(self) -> str:
        return f"RationalFunction({self})"


RF_ZERO = RationalFunction(_BP_ZERO, _BP_ONE)
RF_ONE = RationalFunction(_BP_ONE, _BP_ONE)
RF_I = RationalFunction(BiPoly.const(GR_I), _BP_ONE)
RF_E = RationalFunction(BiPoly.var_E(), _BP_ONE)
RF_LAM = RationalFunction(BiPoly.var_lam(), _BP_ONE)


def rf_arith(a: RationalFunction, b: RationalFunction, op: str) -> RationalFunction:
    """Dispatch add/sub/mul/div; the result is always canonical."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def rf_specialize(
    rf: RationalFunction, e0: GaussianRational, l0: GaussianRational
) -> GaussianRational:
    return rf.specialize(e0, l0)


def rf_is_zero(rf: RationalFunction) -> bool:
    return rf.is_zero()
