"""The two induced modules, transcribed as explicit matrix representations.

``build_DEl`` returns the 32-dimensional module D(E, lam): basis ordering is
v1..v8, u1..u8, chi1..chi8, sigma1..sigma8 with degrees v:(0,0), u:(1,1),
chi:(1,0), sigma:(0,1). H acts as E times the identity and Z*Z as lam times
the identity (lam is the Casimir eigenvalue).

``build_DE`` returns the 16-dimensional module D(E) obtained by setting
lam = 0 and passing to the quotient where the index 5..8 vectors vanish
(they are Z-images of the index 1..4 vectors, and Z acts as zero here); the
basis is v1..v4, u1..u4, chi1..chi4, sigma1..sigma4.

The action tables below are data, transcribed column by column: the entry
list under a source label is the expansion of that vector's image. Matrix
column j holds the image of basis vector j. Do not edit an entry without
re-running the full relation suite; the 21-relation check plus the grading
check pins every coefficient.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Generator, MatrixRep
from .grading import DEG_00, DEG_01, DEG_10, DEG_11, Degree
from .scalars import RF_E, RF_I, RF_LAM, RF_ONE, BiPoly, RationalFunction

__all__ = ["BasisLabel", "InducedModule", "build_DEl", "build_DE", "casimir_eval"]

_FAM_DEGREE = {"v": DEG_00, "u": DEG_11, "chi": DEG_10, "sigma": DEG_01}


@dataclass(frozen=True, slots=True)
class BasisLabel:
    family: str
    index: int

    @property
    def degree(self) -> Degree:
        return _FAM_DEGREE[self.family]

    def __str__(self) -> str:
        return f"{self.family}{self.index}"


@dataclass
class InducedModule:
    name: str
    rep: MatrixRep
    labels: tuple[BasisLabel, ...]

    def position(self, label: str) -> int:
        return self._pos[label]

    def __post_init__(self):
        self._pos = {str(lab): k for k, lab in enumerate(self.labels)}


# Shorthands for the coefficient entries.
E = RF_E
L = RF_LAM
I = RF_I
ONE = RF_ONE
TWO = RationalFunction.of(2)
HALF = RationalFunction.of(Fraction(1, 2))
IH = I * HALF  # i/2

# Action of Q10 -------------------------------------------------------------
_Q10 = {
    "v1": {"chi1": ONE},
    "v2": {"chi1": -E},
    "v3": {"chi1": -E, "chi4": ONE, "chi5": -I},
    "v4": {"chi4": E, "chi5": -I * E, "chi7": IH},
    "v5": {},
    "v6": {"chi2": I * L, "chi6": TWO * E, "chi8": -ONE},
    "v7": {"chi7": ONE},
    "v8": {"chi1": I * L},
    "u1": {},
    "u2": {"sigma2": TWO * E, "sigma4": -ONE, "sigma6": I},
    "u3": {"sigma3": ONE},
    "u4": {"sigma5": I},
    "u5": {"sigma5": ONE},
    "u6": {"sigma5": -E},
    "u7": {"sigma1": -I * L, "sigma8": ONE, "sigma5": -E},
    "u8": {"sigma1": -I * L * E, "sigma8": E, "sigma3": IH * L},
    "chi1": {},
    "chi2": {"v1": HALF * E, "v2": HALF},
    "chi3": {"v2": E, "v3": -E, "v4": ONE, "v7": -IH},
    "chi4": {"v5": IH},
    "chi5": {"v5": HALF},
    "chi6": {"v1": -IH * L, "v8": HALF},
    "chi7": {},
    "chi8": {"v1": -IH * L * E, "v2": IH * L, "v8": E},
    "sigma1": {"u1": HALF},
    "sigma2": {"u4": HALF, "u5": -IH},
    "sigma3": {},
    "sigma4": {"u4": E, "u5": -IH * E, "u6": IH},
    "sigma5": {},
    "sigma6": {"u5": HALF * E, "u6": HALF},
    "sigma7": {"u3": -IH * L, "u6": E, "u7": -E, "u8": ONE},
    "sigma8": {"u1": IH * L},
}

# Action of Q10d ------------------------------------------------------------
_Q10D = {
    "v1": {"chi2": ONE},
    "v2": {"chi2": E},
    "v3": {"chi2": E, "chi3": -ONE, "chi6": I},
    "v4": {"chi8": IH},
    "v5": {"chi1": I * L, "chi5": TWO * E, "chi7": -ONE},
    "v6": {},
    "v7": {"chi2": I * L},
    "v8": {"chi8": ONE},
    "u1": {"sigma1": TWO * E, "sigma3": -ONE, "sigma5": I},
    "u2": {},
    "u3": {"sigma6": I},
    "u4": {"sigma4": ONE},
    "u5": {"sigma6": ONE},
    "u6": {"sigma6": E},
    "u7": {"sigma2": I * L, "sigma6": E, "sigma7": -ONE},
    "u8": {"sigma4": IH * L},
    "chi1": {"v1": HALF * E, "v2": -HALF},
    "chi2": {},
    "chi3": {"v6": IH},
    "chi4": {"v4": ONE, "v8": -IH},
    "chi5": {"v1": -IH * L, "v7": HALF},
    "chi6": {"v6": HALF},
    "chi7": {"v1": -IH * L * E, "v2": -IH * L, "v7": E},
    "chi8": {},
    "sigma1": {"u3": HALF, "u5": -IH},
    "sigma2": {"u2": HALF},
    "sigma3": {"u3": E, "u5": -IH * E, "u6": -IH},
    "sigma4": {},
    "sigma5": {"u5": HALF * E, "u6": -HALF},
    "sigma6": {},
    "sigma7": {"u2": IH * L},
    "sigma8": {"u8": ONE, "u4": -IH * L},
}

# Action of Q01 -------------------------------------------------------------
_Q01 = {
    "v1": {"sigma1": ONE},
    "v2": {"sigma1": -E, "sigma3": ONE, "sigma5": I},
    "v3": {"sigma1": -E},
    "v4": {"sigma8": -IH},
    "v5": {},
    "v6": {"sigma2": -I * L, "sigma6": TWO * E, "sigma7": -ONE},
    "v7": {"sigma1": -I * L},
    "v8": {"sigma8": ONE},
    "u1": {},
    "u2": {"chi2": TWO * E, "chi3": -ONE, "chi6": -I},
    "u3": {"chi5": -I},
    "u4": {"chi4": ONE},
    "u5": {"chi5": ONE},
    "u6": {"chi1": I * L, "chi5": -E, "chi7": ONE},
    "u7": {"chi5": -E},
    "u8": {"chi4": -IH * L},
    "chi1": {"u1": HALF},
    "chi2": {"u3": HALF, "u5": IH},
    "chi3": {"u3": E, "u5": IH * E, "u7": -IH},
    "chi4": {},
    "chi5": {},
    "chi6": {"u5": HALF * E, "u7": HALF},
    "chi7": {"u1": -IH * L},
    "chi8": {"u4": IH * L, "u8": ONE},
    "sigma1": {},
    "sigma2": {"v1": HALF * E, "v3": HALF},
    "sigma3": {"v5": -IH},
    "sigma4": {"v4": ONE, "v8": IH},
    "sigma5": {"v5": HALF},
    "sigma6": {"v1": IH * L, "v7": HALF},
    "sigma7": {"v7": E, "v1": IH * L * E, "v3": -IH * L},
    "sigma8": {},
}

# Action of Q01d ------------------------------------------------------------
_Q01D = {
    "v1": {"sigma2": ONE},
    "v2": {"sigma2": E, "sigma4": -ONE, "sigma6": -I},
    "v3": {"sigma2": E},
    "v4": {"sigma4": E, "sigma6": I * E, "sigma7": -IH},
    "v5": {"sigma1": -I * L, "sigma5": TWO * E, "sigma8": -ONE},
    "v6": {},
    "v7": {"sigma7": ONE},
    "v8": {"sigma2": -I * L},
    "u1": {"chi1": TWO * E, "chi4": -ONE, "chi5": -I},
    "u2": {},
    "u3": {"chi3": ONE},
    "u4": {"chi6": -I},
    "u5": {"chi6": ONE},
    "u6": {"chi2": -I * L, "chi6": E, "chi8": -ONE},
    "u7": {"chi6": E},
    "u8": {"chi2": I * L * E, "chi3": -IH * L, "chi8": E},
    "chi1": {"u4": HALF, "u5": IH},
    "chi2": {"u2": HALF},
    "chi3": {},
    "chi4": {"u4": E, "u5": IH * E, "u7": IH},
    "chi5": {"u5": HALF * E, "u7": -HALF},
    "chi6": {},
    "chi7": {"u3": IH * L, "u6": E, "u7": -E, "u8": ONE},
    "chi8": {"u2": -IH * L},
    "sigma1": {"v1": HALF * E, "v3": -HALF},
    "sigma2": {},
    "sigma3": {"v2": E, "v3": -E, "v4": ONE, "v7": IH},
    "sigma4": {"v6": -IH},
    "sigma5": {"v1": IH * L, "v8": HALF},
    "sigma6": {"v6": HALF},
    "sigma7": {},
    "sigma8": {"v1": IH * L * E, "v3": IH * L, "v8": E},
}

# Action of Z ---------------------------------------------------------------
_Z = {
    "v1": {"u5": ONE},
    "v2": {"u6": ONE},
    "v3": {"u7": ONE},
    "v4": {"u8": ONE},
    "v5": {"u1": L},
    "v6": {"u2": L},
    "v7": {"u3": L},
    "v8": {"u4": L},
    "u1": {"v5": ONE},
    "u2": {"v6": ONE},
    "u3": {"v7": ONE},
    "u4": {"v8": ONE},
    "u5": {"v1": L},
    "u6": {"v2": L},
    "u7": {"v3": L},
    "u8": {"v4": L},
    "chi1": {"sigma5": -ONE},
    "chi2": {"sigma6": -ONE},
    "chi3": {"sigma7": -ONE},
    "chi4": {"sigma8": -ONE},
    "chi5": {"sigma1": -L},
    "chi6": {"sigma2": -L},
    "chi7": {"sigma3": -L},
    "chi8": {"sigma4": -L},
    "sigma1": {"chi5": -ONE},
    "sigma2": {"chi6": -ONE},
    "sigma3": {"chi7": -ONE},
    "sigma4": {"chi8": -ONE},
    "sigma5": {"chi1": -L},
    "sigma6": {"chi2": -L},
    "sigma7": {"chi3": -L},
    "sigma8": {"chi4": -L},
}

_ACTIONS = {
    Generator.Q10: _Q10,
    Generator.Q10d: _Q10D,
    Generator.Q01: _Q01,
    Generator.Q01d: _Q01D,
    Generator.Z: _Z,
}


def _labels(max_index: int) -> tuple[BasisLabel, ...]:
    return tuple(
        BasisLabel(fam, i)
        for fam in ("v", "u", "chi", "sigma")
        for i in range(1, max_index + 1)
    )


def _assemble(
    labels: tuple[BasisLabel, ...],
    actions: dict[Generator, dict[str, dict[str, RationalFunction]]],
    name: str,
) -> InducedModule:
    pos = {str(lab): k for k, lab in enumerate(labels)}
    n = len(labels)
    mats: dict[Generator, list[list[RationalFunction]]] = {}
    zero = RationalFunction.zero()
    for gen, table in actions.items():
        m = [[zero] * n for _ in range(n)]
        for src, image in table.items():
            c = pos[src]
            for dst, coeff in image.items():
                m[pos[dst]][c] = coeff
        mats[gen] = m
    mats[Generator.H] = [
        [E if i == j else zero for j in range(n)] for i in range(n)
    ]
    rep = MatrixRep(
        dim=n,
        basis_degrees=tuple(lab.degree for lab in labels),
        mats=mats,
        name=name,
    )
    return InducedModule(name=name, rep=rep, labels=labels)


def build_DEl() -> InducedModule:
    """The 32-dimensional module with free Casimir eigenvalue lam."""
    return _assemble(_labels(8), _ACTIONS, "DEl")


def build_DE() -> InducedModule:
    """The 16-dimensional lam = 0 quotient module (Z acts as zero)."""
    lam_zero = BiPoly.zero()
    kept = {f"{fam}{i}" for fam in ("v", "u", "chi", "sigma") for i in range(1, 5)}
    actions: dict[Generator, dict[str, dict[str, RationalFunction]]] = {}
    for gen, table in _ACTIONS.items():
        reduced: dict[str, dict[str, RationalFunction]] = {}
        for src, image in table.items():
            if src not in kept:
                continue
            img: dict[str, RationalFunction] = {}
            for dst, coeff in image.items():
                if dst not in kept:
                    continue  # index 5..8 vectors vanish in the quotient
                c0 = coeff.subst_lam(lam_zero)
                if not c0.is_zero():
                    img[dst] = c0
            reduced[src] = img
        actions[gen] = reduced
    return _assemble(_labels(4), actions, "DE")


def casimir_eval(module: InducedModule) -> RationalFunction:
    """Eigenvalue of Z*Z, checked to be scalar on the module.

    Returns lam for D(E, lam) and 0 for D(E); raises if Z*Z is not scalar.
    """
    from .linalg import mat_mul

    z = module.rep.mats[Generator.Z]
    zz = mat_mul(z, z)
    diag = zz[0][0]
    for r in range(module.rep.dim):
        for c in range(module.rep.dim):
            want = diag if r == c else RationalFunction.zero()
            if zz[r][c] != want:
                raise ArithmeticError("Z*Z is not a scalar matrix")
    return diag
