"""Published decomposition bases, transcribed verbatim.

Vectors are dicts ``{ambient basis label: coefficient}`` over the module they
live in (16-dim for the lam = 0 module, 32-dim for the full one). Block
coordinate order is always (v.., u.., chi.., sigma..).

The transcription is verbatim, including entries suspected to be misprints;
the canonical bases used by the decomposition tools are produced by
:func:`z2tk.modtools.canonical_blocks`, which repairs any vector that breaks
the block structure by re-deriving it from the block's published action table
and records the repair as an erratum finding.
"""
from __future__ import annotations

from fractions import Fraction

from .scalars import RF_E, RF_I, RF_LAM, RF_ONE, RationalFunction

__all__ = [
    "VEC16_BLOCKS",
    "VEC32_BLOCKS",
    "SUB4_RAW",
    "SUB4_SCALING",
    "PROBE_SEEDS",
]

E = RF_E
L = RF_LAM
I = RF_I
ONE = RF_ONE
TWO = RationalFunction.of(2)
HALF = RationalFunction.of(Fraction(1, 2))
IH = I * HALF
E2 = E * E


def _vec(**coeffs: RationalFunction) -> dict[str, RationalFunction]:
    return {k: v for k, v in coeffs.items() if not v.is_zero()}


# -- 16-dim module: four 4-dim blocks ---------------------------------------
# Block coordinates (v, u, chi, sigma).
VEC16_BLOCKS: dict[str, list[dict[str, RationalFunction]]] = {
    "D1": [
        _vec(v1=E2, v2=-E, v4=-ONE),
        _vec(u1=ONE),
        _vec(chi1=TWO * E, chi4=-ONE),
        _vec(sigma1=TWO * E, sigma3=-ONE),
    ],
    "D2": [
        _vec(v1=E2, v3=E, v4=-ONE),
        _vec(u2=ONE),
        _vec(chi2=TWO * E, chi3=-ONE),
        _vec(sigma2=TWO * E, sigma3=-ONE),  # suspect: breaks closure; see errata
    ],
    "D3": [
        _vec(v2=E, v3=-E, v4=ONE),
        _vec(u3=ONE),
        _vec(chi3=ONE),
        _vec(sigma3=ONE),
    ],
    "D4": [
        _vec(v4=ONE),
        _vec(u4=ONE),
        _vec(chi4=ONE),
        _vec(sigma4=ONE),
    ],
}

# -- 32-dim module: four 8-dim blocks ---------------------------------------
# Block coordinates (v1, v2, u1, u2, chi1, chi2, sigma1, sigma2). The "a"/"b"
# suffix distinguishes the two copies of each multiplicity-two block.
VEC32_BLOCKS: dict[str, list[dict[str, RationalFunction]]] = {
    "D1a": [
        _vec(v6=ONE),
        _vec(v1=-HALF * (L - TWO * E2), v3=E, v4=-ONE, v7=IH, v8=-IH),
        _vec(u2=ONE),
        _vec(u3=IH * L, u4=-IH * L, u5=-HALF * (L - TWO * E2), u7=E, u8=-ONE),
        _vec(chi2=I * L, chi6=TWO * E, chi8=-ONE),
        _vec(chi2=TWO * E, chi3=-ONE, chi6=-I),
        _vec(sigma2=-I * L, sigma6=TWO * E, sigma7=-ONE),
        _vec(sigma2=TWO * E, sigma4=-ONE, sigma6=I),
    ],
    "D1b": [
        _vec(v1=HALF * L * (L - TWO * E2), v2=L * E, v4=L, v7=IH * L, v8=-IH * L),
        _vec(v5=L - E2),
        _vec(u3=IH * L, u4=-IH * L, u5=HALF * (L - TWO * E2), u6=E, u8=ONE),
        _vec(u1=L * (L - E2)),
        _vec(chi1=L * (L - E2), chi4=L * E, chi5=-I * L * E, chi7=I * L),
        _vec(chi1=TWO * I * E * (L - E2), chi4=-I * (L - E2), chi5=L - E2),
        _vec(sigma1=-E * (L - TWO * E2), sigma3=-E2, sigma5=E2, sigma8=-E),
        _vec(sigma1=-I * L * E, sigma3=I * L, sigma5=L - TWO * E2, sigma8=E),
    ],
    "D2a": [
        _vec(v1=-HALF * L, v2=E, v4=ONE, v7=-I * (L - TWO * E2) / L, v8=-IH),
        _vec(v3=I * L, v7=-E),
        _vec(u3=IH * L, u4=IH * L, u5=HALF * L, u6=-E, u7=E, u8=-ONE),
        _vec(u3=I * E, u7=ONE),
        _vec(chi1=E, chi4=-ONE, chi5=I, chi7=-I * E / L),
        _vec(chi3=ONE, chi6=-I),
        _vec(sigma1=-L, sigma3=E, sigma5=I * E, sigma8=-I),
        _vec(sigma2=I * L, sigma7=-ONE),
    ],
    "D2b": [
        # suspect v8 coefficient: breaks closure; see errata
        _vec(v1=-IH * L * E, v2=I * L, v4=I * E, v7=-HALF * E,
             v8=ONE - HALF * E + E2 / L - E2 * E / L),
        _vec(v1=HALF * L * L, v4=-L, v7=-IH, v8=-I * (HALF * L - E + E2)),
        _vec(u4=-L * E, u6=-I * L),
        _vec(u3=-HALF * L, u4=-HALF * L, u5=-IH * L, u8=I),
        _vec(chi1=I * L, chi4=-I * E, chi5=-E, chi7=ONE),
        _vec(chi2=I * L, chi8=ONE),
        _vec(sigma1=-I * L * E, sigma3=I * L, sigma5=-L, sigma8=E),
        _vec(sigma4=-L, sigma6=-I * L),
    ],
}

# -- 4-dim invariant subspaces on the lam = E^2 locus ------------------------
# Expressed in 8-dim block coordinates; order (v, u, chi, sigma).
SUB4_RAW: dict[str, list[dict[str, RationalFunction]]] = {
    "D1": [
        _vec(v2=ONE),
        _vec(u2=ONE),
        _vec(chi1=I, chi2=E),
        _vec(sigma1=-I, sigma2=E),
    ],
    "D2": [
        _vec(v1=ONE),
        _vec(u1=ONE / E, u2=-ONE),
        _vec(chi1=ONE),
        _vec(sigma1=ONE),
    ],
}

# Diagonal rescaling applied on top of SUB4_RAW (new = factor * old).
SUB4_SCALING: dict[str, list[RationalFunction]] = {
    "D1": [ONE, ONE / E, -ONE, -I],
    "D2": [ONE / E, -ONE / E, -ONE, -I / E],
}

# Degree-(0,0) seed coefficients (c1, c2) whose closure is 4-dim on the locus.
PROBE_SEEDS: dict[str, tuple[RationalFunction, RationalFunction]] = {
    "D1": (RationalFunction.zero(), ONE),
    "D2": (ONE, RationalFunction.zero()),
}
