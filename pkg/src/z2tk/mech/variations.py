"""Symmetry variations, generator derivations, and variable frames.

The three variations delta10, delta01, delta11 act on the eight core fields
by the tabulated images below and extend to products as degree-(0,0)
derivations (each image already contains its transformation parameter).
Stripping the parameters leaves five parameter-free derivations Q10, Q10d,
Q01, Q01d, Zgen whose graded brackets reproduce the defining algebra with the
Hamiltonian acting as i*d/dt; that identification is verified, not assumed.

A :class:`Frame` is an alternative closed variable set related to the core
one by an invertible change of variables on derivatives (auxiliary-variable
conversions). Rules are transported through a frame mechanically: the image
of a frame variable is the core variation of its defining expression, mapped
back into the frame.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Mapping

from ..algebra import Generator, relation_list
from ..grading import DEG_00, DEG_01, DEG_10, DEG_11, Degree, swap_sign
from ..scalars import GR_I, GR_ONE, GaussianRational
from .gpoly import FieldVar, GPoly, const, fld

__all__ = [
    "Rule",
    "Frame",
    "FrameError",
    "CORE_FRAME",
    "FRAMES",
    "DELTA_LABELS",
    "GENERATOR_LABELS",
    "delta_rule",
    "generator_rule",
    "apply_rule",
    "apply_delta",
    "apply_generator",
    "bracket_on_fields",
    "operator_relations_report",
    "squared_z_is_minus_accel",
]

DELTA_LABELS = ("delta10", "delta01", "delta11")
GENERATOR_LABELS = ("Q10", "Q10d", "Q01", "Q01d", "Zgen")

_GEN_OF_LABEL = {
    "Q10": Generator.Q10,
    "Q10d": Generator.Q10d,
    "Q01": Generator.Q01,
    "Q01d": Generator.Q01d,
    "Zgen": Generator.Z,
}


class FrameError(Exception):
    """An expression is not expressible in the requested variable frame."""


@dataclass(frozen=True)
class Rule:
    """A graded derivation given by its images on undifferentiated variables.

    ``degree`` is the derivation's own degree: (0,0) for the deltas (the
    parameter sits inside the image), the generator degree otherwise. The
    rule extends to derivatives by commuting with d/dt and to products by the
    graded Leibniz rule.
    """

    label: str
    degree: Degree
    images: Mapping[tuple[str, bool], GPoly]


def apply_rule(rule: Rule, p: GPoly) -> GPoly:
    out = GPoly.zero()
    for m, c in p.terms:
        for k, s in enumerate(m):
            if not isinstance(s, FieldVar):
                continue
            key = (s.base, s.bar)
            if key not in rule.images:
                raise KeyError(f"rule {rule.label} has no image for {s}")
            img = rule.images[key].ddt(s.dots)
            if img.is_zero():
                continue
            sign = 1
            for q in m[:k]:
                sign *= swap_sign(rule.degree, q.degree)
            head = GPoly(((m[:k], c if sign == 1 else -c),))
            tail = GPoly(((m[k + 1:], GaussianRational.one()),))
            out = out + head * img * tail
    return out


# -- the core variable set and its variation images ---------------------------

CORE_VARS: tuple[tuple[str, bool], ...] = (
    ("x", False), ("x", True),
    ("z", False), ("z", True),
    ("psi", False), ("psi", True),
    ("xi", False), ("xi", True),
)

_I = GR_I
_MI = -GR_I


def _core_delta_images() -> dict[str, dict[tuple[str, bool], GPoly]]:
    e10, e10b = const("eps10"), const("epsBar10")
    e01, e01b = const("eps01"), const("epsBar01")
    e11 = const("eps11")
    d = lambda base, bar=False: fld(base, dots=1, bar=bar)
    f = lambda base, bar=False: fld(base, bar=bar)
    return {
        "delta10": {
            ("x", False): e10b * f("psi"),
            ("z", False): e10b * f("xi"),
            ("psi", False): (e10 * d("x")).scale(_I),
            ("xi", False): (e10 * d("z")).scale(_I),
            ("x", True): -(e10 * f("psi", True)),
            ("z", True): e10 * f("xi", True),
            ("psi", True): (e10b * d("x", True)).scale(_MI),
            ("xi", True): (e10b * d("z", True)).scale(_I),
        },
        "delta01": {
            ("x", False): (e01b * f("xi")).scale(_MI),
            ("z", False): (e01b * f("psi")).scale(_MI),
            ("psi", False): -(e01 * d("z")),
            ("xi", False): -(e01 * d("x")),
            ("x", True): (e01 * f("xi", True)).scale(_MI),
            ("z", True): (e01 * f("psi", True)).scale(_I),
            ("psi", True): e01b * d("z", True),
            ("xi", True): -(e01b * d("x", True)),
        },
        "delta11": {
            ("x", False): -(e11 * d("z")),
            ("z", False): -(e11 * d("x")),
            ("psi", False): e11 * d("xi"),
            ("xi", False): e11 * d("psi"),
            ("x", True): -(e11 * d("z", True)),
            ("z", True): -(e11 * d("x", True)),
            ("psi", True): -(e11 * d("xi", True)),
            ("xi", True): -(e11 * d("psi", True)),
        },
    }


def _core_generator_images() -> dict[str, dict[tuple[str, bool], GPoly]]:
    """Parameter-free derivations obtained by stripping the parameters.

    With delta10 = -eps10*Q10 - epsBar10*Q10d, delta01 likewise, and
    delta11 = i*eps11*Zgen, the images below are the unique left-coefficient
    extractions; the operator-algebra report pins the sign conventions.
    """
    zero = GPoly.zero()
    d = lambda base, bar=False: fld(base, dots=1, bar=bar)
    f = lambda base, bar=False: fld(base, bar=bar)
    return {
        "Q10": {
            ("x", False): zero,
            ("z", False): zero,
            ("psi", False): d("x").scale(_MI),
            ("xi", False): d("z").scale(_MI),
            ("x", True): f("psi", True),
            ("z", True): -f("xi", True),
            ("psi", True): zero,
            ("xi", True): zero,
        },
        "Q10d": {
            ("x", False): -f("psi"),
            ("z", False): -f("xi"),
            ("psi", False): zero,
            ("xi", False): zero,
            ("x", True): zero,
            ("z", True): zero,
            ("psi", True): d("x", True).scale(_I),
            ("xi", True): d("z", True).scale(_MI),
        },
        "Q01": {
            ("x", False): zero,
            ("z", False): zero,
            ("psi", False): d("z"),
            ("xi", False): d("x"),
            ("x", True): f("xi", True).scale(_I),
            ("z", True): f("psi", True).scale(_MI),
            ("psi", True): zero,
            ("xi", True): zero,
        },
        "Q01d": {
            ("x", False): f("xi").scale(_I),
            ("z", False): f("psi").scale(_I),
            ("psi", False): zero,
            ("xi", False): zero,
            ("x", True): zero,
            ("z", True): zero,
            ("psi", True): -d("z", True),
            ("xi", True): d("x", True),
        },
        "Zgen": {
            ("x", False): d("z").scale(_I),
            ("z", False): d("x").scale(_I),
            ("psi", False): d("xi").scale(_MI),
            ("xi", False): d("psi").scale(_MI),
            ("x", True): d("z", True).scale(_I),
            ("z", True): d("x", True).scale(_I),
            ("psi", True): d("xi", True).scale(_I),
            ("xi", True): d("psi", True).scale(_I),
        },
    }


_RULE_DEGREES = {
    "delta10": DEG_00,
    "delta01": DEG_00,
    "delta11": DEG_00,
    "Q10": DEG_10,
    "Q10d": DEG_10,
    "Q01": DEG_01,
    "Q01d": DEG_01,
    "Zgen": DEG_11,
}


# -- frames --------------------------------------------------------------------

_Subst = Callable[[FieldVar], GPoly | None]


def _fw_F(s: FieldVar) -> GPoly | None:
    if s.base == "z":
        if s.dots == 0:
            raise FrameError("undifferentiated z is not expressible in this frame")
        return fld("F", s.dots - 1, s.bar)
    return None


def _bw_F(s: FieldVar) -> GPoly | None:
    if s.base == "F":
        return fld("z", s.dots + 1, s.bar)
    return None


def _fw_yA(s: FieldVar) -> GPoly | None:
    if s.base == "x":
        if s.dots == 0:
            raise FrameError("undifferentiated x is not expressible in this frame")
        sgn = _I if s.bar else _MI
        return fld("y", s.dots) + fld("A", s.dots - 1).scale(sgn)
    return None


def _bw_yA(s: FieldVar) -> GPoly | None:
    half = GaussianRational.of(1, 0) / GaussianRational.of(2, 0)
    if s.base == "y":
        return (fld("x", s.dots) + fld("x", s.dots, bar=True)).scale(half)
    if s.base == "A":
        return (fld("x", s.dots + 1) - fld("x", s.dots + 1, bar=True)).scale(half * _I)
    return None


def _fw_a(s: FieldVar) -> GPoly | None:
    if s.base == "x":
        if s.dots == 0:
            raise FrameError("undifferentiated x is not expressible in this frame")
        return fld("a", s.dots - 1, s.bar)
    return None


def _bw_a(s: FieldVar) -> GPoly | None:
    if s.base == "a":
        return fld("x", s.dots + 1, s.bar)
    return None


@dataclass(frozen=True)
class Frame:
    """A closed variable set plus the substitutions linking it to the core set."""

    name: str
    variables: tuple[tuple[str, bool], ...]
    forwards: tuple[_Subst, ...] = ()
    backwards: tuple[_Subst, ...] = ()

    def to_frame(self, p: GPoly) -> GPoly:
        """Rewrite a core-variable polynomial in this frame's variables."""
        for sub in self.forwards:
            p = p.substitute_fields(sub)
        return p

    def to_core(self, p: GPoly) -> GPoly:
        """Rewrite a frame polynomial back in the core variables."""
        for sub in self.backwards:
            p = p.substitute_fields(sub)
        return p


CORE_FRAME = Frame("core", CORE_VARS)

FRAMES: dict[str, Frame] = {
    "core": CORE_FRAME,
    "F": Frame(
        "F",
        (("x", False), ("x", True), ("F", False), ("F", True),
         ("psi", False), ("psi", True), ("xi", False), ("xi", True)),
        forwards=(_fw_F,),
        backwards=(_bw_F,),
    ),
    "yA_F": Frame(
        "yA_F",
        (("y", False), ("A", False), ("F", False), ("F", True),
         ("psi", False), ("psi", True), ("xi", False), ("xi", True)),
        forwards=(_fw_F, _fw_yA),
        backwards=(_bw_F, _bw_yA),
    ),
    "yA": Frame(
        "yA",
        (("y", False), ("A", False), ("z", False), ("z", True),
         ("psi", False), ("psi", True), ("xi", False), ("xi", True)),
        forwards=(_fw_yA,),
        backwards=(_bw_yA,),
    ),
    "a": Frame(
        "a",
        (("a", False), ("a", True), ("z", False), ("z", True),
         ("psi", False), ("psi", True), ("xi", False), ("xi", True)),
        forwards=(_fw_a,),
        backwards=(_bw_a,),
    ),
}


def _transport(images: dict[tuple[str, bool], GPoly], label: str, frame: Frame) -> Rule:
    core_rule = Rule(label, _RULE_DEGREES[label], images)
    if frame.name == "core":
        return core_rule
    framed: dict[tuple[str, bool], GPoly] = {}
    for base, bar in frame.variables:
        defining = frame.to_core(fld(base, 0, bar))
        framed[(base, bar)] = frame.to_frame(apply_rule(core_rule, defining))
    return Rule(label, core_rule.degree, framed)


@lru_cache(maxsize=None)
def delta_rule(label: str, frame_name: str = "core") -> Rule:
    if label not in DELTA_LABELS:
        raise ValueError(f"unknown variation {label!r}")
    return _transport(_core_delta_images()[label], label, FRAMES[frame_name])


@lru_cache(maxsize=None)
def generator_rule(label: str, frame_name: str = "core") -> Rule:
    if label not in GENERATOR_LABELS:
        raise ValueError(f"unknown generator derivation {label!r}")
    return _transport(_core_generator_images()[label], label, FRAMES[frame_name])


def apply_delta(label: str, p: GPoly, frame: Frame = CORE_FRAME) -> GPoly:
    return apply_rule(delta_rule(label, frame.name), p)


def apply_generator(label: str, p: GPoly, frame: Frame = CORE_FRAME) -> GPoly:
    return apply_rule(generator_rule(label, frame.name), p)


# -- the operator algebra on fields -------------------------------------------

def _hamiltonian(p: GPoly) -> GPoly:
    return p.ddt().scale(_I)


def bracket_on_fields(label_a: str, label_b: str, p: GPoly, frame: Frame = CORE_FRAME) -> GPoly:
    """Graded bracket of two generator derivations applied to a polynomial."""
    ra, rb = generator_rule(label_a, frame.name), generator_rule(label_b, frame.name)
    ab = apply_rule(ra, apply_rule(rb, p))
    ba = apply_rule(rb, apply_rule(ra, p))
    if swap_sign(ra.degree, rb.degree) == -1:
        return ab + ba
    return ab - ba


_LABEL_OF_GEN = {g: lab for lab, g in _GEN_OF_LABEL.items()}


def operator_relations_report(frame: Frame = CORE_FRAME) -> list[tuple[str, bool]]:
    """Check every defining relation on every variable of the frame.

    H on the right-hand sides acts as i*d/dt; relations whose left side
    involves H are checked with that action as well (H commutes with all
    five derivations because images commute with d/dt by construction).
    """
    gr_one = GaussianRational.of(1)
    results = []
    for rel in relation_list():
        ok = True
        for base, bar in frame.variables:
            v = fld(base, 0, bar)
            sides = []
            for g in (rel.left, rel.right):
                if g is Generator.H:
                    sides.append(None)
                else:
                    sides.append(_LABEL_OF_GEN[g])
            la, lb = sides
            if la is None and lb is None:
                lhs = GPoly.zero()  # [H, H] with H = i*d/dt
            elif la is None or lb is None:
                lab = lb if la is None else la
                rule = generator_rule(lab, frame.name)
                g_then_h = _hamiltonian(apply_rule(rule, v))
                h_then_g = apply_rule(rule, _hamiltonian(v))
                lhs = (g_then_h - h_then_g) if la is None else (h_then_g - g_then_h)
                if swap_sign(DEG_00, rule.degree) == -1:  # pragma: no cover
                    raise AssertionError("H bracket is always a commutator")
            else:
                lhs = bracket_on_fields(la, lb, v, frame)
            rhs = GPoly.zero()
            for g, coeff in rel.rhs:
                c = coeff.specialize(gr_one, gr_one)
                if g is Generator.H:
                    rhs = rhs + _hamiltonian(v).scale(c)
                else:
                    rhs = rhs + apply_generator(_LABEL_OF_GEN[g], v, frame).scale(c)
            if not (lhs - rhs).is_zero():
                ok = False
                break
        results.append((rel.name, ok))
    return results


def squared_z_is_minus_accel(frame: Frame = CORE_FRAME) -> bool:
    """Zgen applied twice equals minus the second time derivative on every variable."""
    for base, bar in frame.variables:
        v = fld(base, 0, bar)
        twice = apply_generator("Zgen", apply_generator("Zgen", v, frame), frame)
        if not (twice + v.ddt(2)).is_zero():
            return False
    return True
