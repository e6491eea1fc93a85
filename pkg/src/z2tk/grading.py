"""Z2 x Z2 degrees and the commutation-sign rule.

A degree is a pair of bits (a, b). Degrees add componentwise mod 2. For two
degrees d1 = (a, b) and d2 = (a', b') the scalar product <d1, d2> = a*a' + b*b'
(mod 2) decides how homogeneous objects pass each other:

    swap_sign(d1, d2) = +1 if <d1, d2> is even, -1 if odd.

A bracket of degrees d1, d2 is a commutator when <d1, d2> is even and an
anticommutator when odd; the bracket type is always derived from degrees,
never stored.
"""
from __future__ import annotations

from dataclasses import dataclass

__all__ = ["Degree", "swap_sign", "DEG_00", "DEG_11", "DEG_10", "DEG_01", "ALL_DEGREES"]


@dataclass(frozen=True, slots=True)
class Degree:
    a: int
    b: int

    def __post_init__(self):
        if self.a not in (0, 1) or self.b not in (0, 1):
            raise ValueError(f"degree bits must be 0 or 1, got ({self.a}, {self.b})")

    def __add__(self, other: "Degree") -> "Degree":
        return Degree((self.a + other.a) % 2, (self.b + other.b) % 2)

    def dot(self, other: "Degree") -> int:
        return (self.a * other.a + self.b * other.b) % 2

    def is_self_odd(self) -> bool:
        """True when <d, d> is odd, i.e. a symbol of this degree squares to zero."""
        return self.dot(self) == 1

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


DEG_00 = Degree(0, 0)
DEG_11 = Degree(1, 1)
DEG_10 = Degree(1, 0)
DEG_01 = Degree(0, 1)
ALL_DEGREES = (DEG_00, DEG_11, DEG_10, DEG_01)


def swap_sign(d1: Degree, d2: Degree) -> int:
    """+1 or -1 picked up when homogeneous objects of degrees d1, d2 swap."""
    return -1 if d1.dot(d2) else 1
