"""Text forms used by the CLI and the service.

Scalar literals are exact Gaussian rationals written ``a/b+c/d*i`` (either
part optional, no floating point). Generating functions for the composed
action are sums of ``*``-joined factors, where a factor is a rational
literal, ``i``, ``mu``, or a field symbol such as ``xbar`` or ``ddz``.
Specialization panels are semicolon-separated ``E,lam`` pairs.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .mech.gpoly import FIELD_DEGREES, GPoly, REAL_FIELDS, const, fld, num
from .scalars import GR_I, GR_ONE, GaussianRational

_RATIONAL = re.compile(r"[+-]?\d+(/[1-9]\d*)?\Z")


def _fraction(part: str, original: str) -> Fraction:
    if not _RATIONAL.match(part):
        raise ValueError(
            f"bad scalar literal {original!r}: expected a/b+c/d*i with integer a, b, c, d"
        )
    return Fraction(part)


def parse_gr(text: str) -> GaussianRational:
    """Parse an exact scalar literal like ``2``, ``-1/2``, ``3*i``, ``1/2+3/4*i``."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty scalar literal")
    re_part, im_part = "0", "0"
    if s.endswith("i"):
        body = s[:-1]
        if body.endswith("*"):
            body = body[:-1]
        cut = max(body.rfind("+", 1), body.rfind("-", 1))
        if cut == -1:
            im_body = body
        else:
            re_part, im_body = body[:cut], body[cut:]
        if im_body in ("", "+"):
            im_body = "1"
        elif im_body == "-":
            im_body = "-1"
        im_part = im_body
    else:
        re_part = s
    return GaussianRational(_fraction(re_part, text), _fraction(im_part, text))


def parse_field_symbol(token: str) -> tuple[str, bool, int]:
    """Split a symbol like ``ddxbar`` into (base, barred, derivative order)."""
    inner = token
    bar = False
    if inner.endswith("bar"):
        inner, bar = inner[:-3], True
    dots = 0
    while True:
        rest = inner[dots:]
        if rest in FIELD_DEGREES:
            if bar and rest in REAL_FIELDS:
                raise ValueError(f"{rest!r} is a real variable and has no bar")
            return rest, bar, dots
        if dots < len(inner) and inner[dots] == "d":
            dots += 1
            continue
        raise ValueError(f"unknown field symbol {token!r}")


def parse_gpoly(text: str) -> GPoly:
    """Parse a sum of ``*``-joined factors into an exact graded polynomial."""
    out = GPoly.zero()
    stripped = text.replace(" ", "")
    if not stripped:
        raise ValueError("empty expression")
    for raw_term in stripped.replace("-", "+-").split("+"):
        if not raw_term:
            continue
        term_txt = raw_term
        coeff = GR_ONE
        if term_txt.startswith("-"):
            coeff = -coeff
            term_txt = term_txt[1:]
        if not term_txt:
            raise ValueError(f"dangling sign in {text!r}")
        term = num(coeff)
        for factor in term_txt.split("*"):
            if not factor:
                raise ValueError(f"empty factor in {text!r}")
            if factor == "i":
                term = term.scale(GR_I)
            elif factor[0].isdigit():
                term = term.scale(parse_gr(factor))
            elif factor in ("mu", "eps10", "epsBar10", "eps01", "epsBar01", "eps11"):
                term = term * const(factor)
            else:
                base, bar, dots = parse_field_symbol(factor)
                term = term * fld(base, dots, bar)
        out = out + term
    return out


def parse_panel(text: str) -> list[tuple[GaussianRational, GaussianRational]]:
    """Parse ``E,lam;E,lam;...`` into exact specialization points."""
    points = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = chunk.split(",")
        if len(parts) != 2:
            raise ValueError(f"panel point {chunk!r} is not of the form E,lam")
        points.append((parse_gr(parts[0]), parse_gr(parts[1])))
    if not points:
        raise ValueError("empty panel")
    return points
