"""Graded polynomials, variation rules, the Lagrangian catalogue and charges."""
import random

import pytest

from z2tk.grading import DEG_00, DEG_01, DEG_10, DEG_11, swap_sign
from z2tk.mech import (
    CORE_FRAME,
    FRAMES,
    DerivativeCapError,
    GPoly,
    apply_delta,
    apply_generator,
    build_action1,
    catalogue,
    catalogue_names,
    const,
    deriv_cap,
    euler_lagrange,
    fld,
    generator_rule,
    is_total_derivative,
    mechanics_report,
    noether_charges,
    num,
    on_shell_charges,
    substitute_eom,
)
from z2tk.mech.gpoly import FIELD_DEGREES, FieldVar, GradedConstant
from z2tk.mech.lagrangians import (
    Lagrangian,
    action1_report,
    higher_derivative_identity,
    published_action1_display,
)
from z2tk.mech.variations import apply_rule, delta_rule, operator_relations_report, squared_z_is_minus_accel
from z2tk.parsing import parse_gr, parse_gpoly
from z2tk.scalars import GaussianRational

GR = GaussianRational.of

_CORE_BASES = ("x", "z", "psi", "xi")
_GEN_LABELS = ("Q10", "Q10d", "Q01", "Q01d", "Zgen")
_DELTA_LABELS = ("delta10", "delta01", "delta11")


def _random_symbol(rng, with_constants=False):
    if with_constants and rng.random() < 0.25:
        return GradedConstant(rng.choice(("mu", "eps10", "eps01")))
    return FieldVar(rng.choice(_CORE_BASES), rng.random() < 0.5, rng.randrange(0, 3))


def _random_monomial_poly(rng, max_len=3, with_constants=False):
    while True:
        syms = tuple(
            _random_symbol(rng, with_constants)
            for _ in range(rng.randrange(1, max_len + 1))
        )
        p = GPoly.from_terms([(syms, GR(rng.choice((1, -1, 2))))])
        if not p.is_zero():
            return p


# -- normalization ------------------------------------------------------------------

def test_product_is_associative():
    rng = random.Random(1)
    for _ in range(60):
        a, b, c = (_random_monomial_poly(rng, 2, True) for _ in range(3))
        assert ((a * b) * c - a * (b * c)).is_zero()


def test_two_factor_swap_follows_the_grading_sign():
    rng = random.Random(2)
    seen_minus = False
    for _ in range(80):
        sa, sb = _random_symbol(rng, True), _random_symbol(rng, True)
        if sa == sb:
            continue
        a = GPoly.from_terms([((sa,), GR(1))])
        b = GPoly.from_terms([((sb,), GR(1))])
        sign = swap_sign(sa.degree, sb.degree)
        assert (b * a - (a * b).scale(GR(sign))).is_zero()
        seen_minus = seen_minus or sign == -1
    assert seen_minus


def test_self_odd_symbols_square_to_zero():
    for base in ("psi", "xi"):
        v = fld(base)
        assert (v * v).is_zero()
        assert (fld(base, 1) * fld(base, 1)).is_zero()
        assert not (v * fld(base, 1)).is_zero()
    # x and z pair evenly with themselves: their squares survive
    assert not (fld("x") * fld("x")).is_zero()
    assert not (fld("z") * fld("z")).is_zero()


def test_product_degrees_add():
    rng = random.Random(3)
    for _ in range(40):
        a = _random_monomial_poly(rng, 2, True)
        b = _random_monomial_poly(rng, 2, True)
        p = a * b
        if p.is_zero():
            continue
        assert p.homogeneous_degree() == a.homogeneous_degree() + b.homogeneous_degree()


def test_conjugation_is_an_involution_commuting_with_ddt():
    rng = random.Random(4)
    for _ in range(40):
        p = _random_monomial_poly(rng, 3, True) + _random_monomial_poly(rng, 2)
        assert (p.conjugate().conjugate() - p).is_zero()
        assert (p.ddt().conjugate() - p.conjugate().ddt()).is_zero()


def test_field_degrees_anchor():
    assert FIELD_DEGREES["x"] == DEG_00
    assert FIELD_DEGREES["z"] == DEG_11
    assert FIELD_DEGREES["psi"] == DEG_10
    assert FIELD_DEGREES["xi"] == DEG_01
    assert FieldVar("x", True, 2).degree == DEG_00
    with pytest.raises(ValueError):
        FieldVar("y", bar=True)
    with pytest.raises(ValueError):
        fld("w")


# -- variation rules ------------------------------------------------------------------

def test_rules_satisfy_the_graded_leibniz_identity():
    rng = random.Random(5)
    for _ in range(40):
        f = _random_monomial_poly(rng, 2)
        g = _random_monomial_poly(rng, 2)
        for label in _GEN_LABELS + _DELTA_LABELS:
            rule = generator_rule(label) if label in _GEN_LABELS else delta_rule(label)
            sign = swap_sign(rule.degree, f.homogeneous_degree())
            lhs = apply_rule(rule, f * g)
            rhs = apply_rule(rule, f) * g + (f * apply_rule(rule, g)).scale(GR(sign))
            assert (lhs - rhs).is_zero(), label


def test_rules_commute_with_time_derivative():
    rng = random.Random(6)
    for _ in range(25):
        p = _random_monomial_poly(rng, 2) + _random_monomial_poly(rng, 2)
        for label in _GEN_LABELS + _DELTA_LABELS:
            rule = generator_rule(label) if label in _GEN_LABELS else delta_rule(label)
            assert (apply_rule(rule, p.ddt()) - apply_rule(rule, p).ddt()).is_zero()


def test_all_21_operator_relations_hold_in_every_frame():
    for frame in FRAMES.values():
        report = operator_relations_report(frame)
        assert len(report) == 21
        assert all(ok for _, ok in report), frame.name
        assert squared_z_is_minus_accel(frame)


def test_frame_round_trips_are_exact():
    free = catalogue("L0").expr
    for name in ("L1", "L2", "L3", "L4"):
        L = catalogue(name)
        assert (L.frame.to_core(L.expr) - free).is_zero()
        assert (L.frame.to_frame(L.frame.to_core(L.expr)) - L.expr).is_zero()


# -- total-derivative test and Euler-Lagrange oracles ----------------------------------

def test_time_derivatives_are_recognized_with_verified_witness():
    rng = random.Random(7)
    for _ in range(20):
        q = _random_monomial_poly(rng, 3) + _random_monomial_poly(rng, 2)
        d = q.ddt()
        ok, witness = is_total_derivative(d)
        assert ok
        assert (witness.ddt() - d).is_zero()


def test_non_derivatives_are_rejected():
    ok, witness = is_total_derivative(fld("psi", 0, True) * fld("psi", 1))
    assert not ok and witness is None
    ok, witness = is_total_derivative(num(1) + fld("x", 1))
    assert not ok and witness is None
    assert is_total_derivative(GPoly.zero()) == (True, GPoly.zero())


def test_euler_lagrange_oracles():
    assert euler_lagrange(catalogue("L0"), "xbar").render() == "-ddx"
    assert euler_lagrange(catalogue("L1"), "Fbar").render() == "F"
    assert euler_lagrange(catalogue("L2"), "A").render() == "2*A"


def test_composed_lagrangian_field_equations():
    expected = {
        "x": "-2*i*mu*dddzbar",
        "xbar": "-2*i*mu*dddz",
        "z": "2*i*mu*dddxbar",
        "zbar": "2*i*mu*dddx",
        "psi": "2*mu*ddxibar",
        "psibar": "-2*mu*ddxi",
        "xi": "-2*mu*ddpsibar",
        "xibar": "2*mu*ddpsi",
    }
    assert mechanics_report("Lg").el_equations == expected


# -- catalogue invariance ----------------------------------------------------------------

def test_catalogue_quadratic_lagrangians_are_invariant_under_all_three_deltas():
    for name in ("L0", "L1", "L2", "L3", "L4"):
        L = catalogue(name)
        for label in _DELTA_LABELS:
            variation = apply_delta(label, L.expr, L.frame)
            ok, witness = is_total_derivative(variation)
            assert ok, (name, label)
            assert (witness.ddt() - variation).is_zero()


def test_composed_lagrangian_is_invariant_only_under_the_10_variation():
    L = catalogue("Lg")
    ok10, w10 = is_total_derivative(apply_delta("delta10", L.expr, L.frame))
    assert ok10 and (
        w10.render()
        == "-i*mu*eps10*x*ddxibar + -i*mu*eps10*ddx*xibar + -2*i*mu*eps10*dz*dpsibar"
    )
    for label in ("delta01", "delta11"):
        ok, witness = is_total_derivative(apply_delta(label, L.expr, L.frame))
        assert not ok and witness is None


def test_composed_lagrangian_render_is_frozen():
    assert catalogue("Lg").expr.render() == (
        "-i*mu*x*dddzbar + -i*mu*ddx*dzbar + -2*i*mu*ddxbar*dz"
        " + -mu*psi*ddxibar + -mu*ddpsi*xibar + -2*mu*dpsibar*dxi"
    )


# -- Noether charges -----------------------------------------------------------------------

EXPECTED_CONSTANTS = {
    "L0": {"Q10": "1", "Q10d": "-1", "Q01": "i", "Q01d": "i", "Zgen": "i"},
    "L1": {"Q10": "1", "Q10d": "-1", "Q01": "i", "Q01d": "i", "Zgen": "1"},
    "L2": {"Q10": "1", "Q10d": "-1", "Q01": "i", "Q01d": "i", "Zgen": "1"},
    "L3": {"Q10": "1", "Q10d": "-1", "Q01": "i", "Q01d": "i", "Zgen": "i"},
    "L4": {"Q10": "1", "Q10d": "1", "Q01": "i", "Q01d": "-i", "Zgen": "1"},
}


def test_charges_are_conserved_graded_and_match_published_tables():
    for name, expected in EXPECTED_CONSTANTS.items():
        report = mechanics_report(name)
        got = {}
        for ch in report.charges:
            assert ch.conserved and ch.degree_ok, (name, ch.generator)
            assert ch.matches_paper is True
            assert ch.used_eom is False
            got[ch.generator] = ch.constant
        assert got == expected, name


def test_charge_expression_oracles():
    by_gen = {c.generator: c.expr for c in mechanics_report("L0").charges}
    assert by_gen["Zgen"] == "i*dx*dzbar + i*dxbar*dz"
    assert by_gen["Q10"] == "dx*psibar + dz*xibar"
    assert {c.generator: c.expr for c in mechanics_report("L2").charges}["Zgen"] == (
        "A*F + -A*Fbar"
    )
    assert {c.generator: c.expr for c in mechanics_report("L3").charges}["Zgen"] == (
        "i*dz*dy + i*dzbar*dy"
    )
    l1 = {c.generator: c.expr for c in mechanics_report("L1").charges}
    l4 = {c.generator: c.expr for c in mechanics_report("L4").charges}
    assert l1["Zgen"] == "0" and l4["Zgen"] == "0"


def test_noether_witnesses_certify_the_variations():
    L = catalogue("L0")
    ns = noether_charges(L)
    assert set(ns.charges) == set(_GEN_LABELS)
    assert all(ns.invariance.values())
    for label in _DELTA_LABELS:
        variation = apply_delta(label, L.expr, L.frame)
        assert (ns.witnesses[label].ddt() - variation).is_zero()


def test_noether_charges_raises_on_a_broken_symmetry():
    with pytest.raises(ValueError, match="not invariant under delta01"):
        noether_charges(catalogue("Lg"))


def test_composed_charges_exist_only_for_the_10_pair():
    report = mechanics_report("Lg")
    by_gen = {c.generator: c for c in report.charges}
    assert set(by_gen) == {"Q10", "Q10d"}
    assert by_gen["Q10"].expr == (
        "2*i*mu*dx*dxibar + -2*i*mu*ddx*xibar + -2*i*mu*dz*dpsibar + 2*i*mu*ddz*psibar"
    )
    assert by_gen["Q10d"].expr == (
        "2*i*mu*dxbar*dxi + -2*i*mu*ddxbar*xi + 2*i*mu*dzbar*dpsi + -2*i*mu*ddzbar*psi"
    )
    for ch in by_gen.values():
        assert ch.conserved and ch.degree_ok
        assert ch.matches_paper is None and ch.constant is None


# -- on-shell reduction ---------------------------------------------------------------------

def test_on_shell_charges_eliminate_auxiliary_variables():
    assert on_shell_charges(catalogue("L2"))["Zgen"] == "0"
    assert on_shell_charges(catalogue("L4"))["Zgen"] == "0"
    assert on_shell_charges(catalogue("L0"))["Zgen"] == "i*dx*dzbar + i*dxbar*dz"


def test_substitute_eom_guards():
    with pytest.raises(ValueError, match="not variables"):
        substitute_eom(fld("x"), catalogue("L2"), ["x"])
    with pytest.raises(ValueError, match="algebraic"):
        substitute_eom(fld("x"), catalogue("L0"), ["x"])


# -- the composed action --------------------------------------------------------------------

def test_higher_derivative_identity_holds_for_admissible_generators():
    mu = const("mu")
    for g in (
        mu * fld("x") * fld("x", 0, True),
        fld("z"),
        fld("psi") * fld("xi"),
    ):
        assert higher_derivative_identity(g)


def test_build_action1_validation():
    with pytest.raises(ValueError, match="degree"):
        build_action1(fld("x"))
    with pytest.raises(ValueError, match="parameter-free"):
        build_action1(const("eps11") * fld("x") * fld("x", 0, True))


def test_action1_report_on_a_general_generator():
    report = action1_report(fld("z"))
    assert report.lagrangian == "action1"
    assert report.higher_derivative_identity is True
    assert report.display_match is None


def test_mechanics_report_verdicts():
    for name in ("L0", "L1", "L2", "L3", "L4"):
        report = mechanics_report(name)
        assert report.ok and report.real_up_to_total_derivative
        assert all(v["total_derivative"] for v in report.invariance.values())
    report = mechanics_report("Lg")
    assert not report.ok
    assert not report.real_up_to_total_derivative
    assert report.invariance["delta10"]["total_derivative"] is True
    assert report.invariance["delta01"] == {"total_derivative": False, "witness": None}
    assert report.invariance["delta11"] == {"total_derivative": False, "witness": None}
    assert report.display_match is True
    assert report.higher_derivative_identity is True
    defect = catalogue("Lg").expr - published_action1_display()
    assert is_total_derivative(defect)[0]


def test_catalogue_misc():
    assert catalogue_names() == ("L0", "L1", "L2", "L3", "L4", "Lg")
    with pytest.raises(ValueError):
        catalogue("L9")
    with pytest.raises(ValueError, match="degree"):
        Lagrangian("bad", fld("psi"), CORE_FRAME)


# -- derivative cap and parsing ---------------------------------------------------------------

def test_derivative_cap(monkeypatch):
    assert deriv_cap() == 6
    top = fld("x", 6)
    with pytest.raises(DerivativeCapError, match="derivative order 7 of ddddddx exceeds cap 6"):
        top.ddt()
    monkeypatch.setenv("Z2TK_DERIV_CAP", "8")
    assert deriv_cap() == 8
    assert not top.ddt().is_zero()


def test_parse_gr_accepts_exact_literals():
    from fractions import Fraction

    assert parse_gr("1/2+3/4*i") == GaussianRational(Fraction(1, 2), Fraction(3, 4))
    assert parse_gr("1-i") == GaussianRational(Fraction(1), Fraction(-1))
    assert parse_gr("-2/3-1/3*i") == GaussianRational(Fraction(-2, 3), Fraction(-1, 3))
    assert parse_gr("i") == GaussianRational(Fraction(0), Fraction(1))
    assert parse_gr("7") == GaussianRational(Fraction(7), Fraction(0))


def test_parse_gr_rejects_inexact_literals():
    for bad in ("1.5", "1e3", "1/0", "2.0*i", "", "x"):
        with pytest.raises(ValueError):
            parse_gr(bad)


def test_parse_gpoly_round_trips_the_generating_example():
    g = parse_gpoly("mu*x*xbar")
    assert (g - const("mu") * fld("x") * fld("x", 0, True)).is_zero()
    assert (parse_gpoly("2*ddz + -i*psi*xi") - (
        fld("z", 2).scale(GR(2)) + (fld("psi") * fld("xi")).scale(GR(0, -1))
    )).is_zero()
    with pytest.raises(ValueError):
        parse_gpoly("w*x")
    with pytest.raises(ValueError):
        parse_gpoly("ybar")
