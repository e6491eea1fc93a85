"""The executable verification suite behind the ``all`` verb.

Eleven numbered checks cover the whole toolkit: exact relation and Casimir
identities on both induced modules, both block decompositions with erratum
accounting, the invariant-subspace dimension criterion, inequivalence
certificates, the rescaled 4-dim tables, the operator algebra on fields,
Lagrangian invariance with witnesses, Noether-charge matching and
conservation, the higher-derivative identity, and the randomized property
suites. Every check is exact; there are no tolerances anywhere.

Check 8 is expected to fail on two sub-cases and is reported honestly: the
composed higher-derivative Lagrangian is a genuine symmetry only for the
(1,0) variation; for the (0,1) and (1,1) variations the variational
derivative of the transformed Lagrangian is provably nonzero (the square of
the (1,1) derivation agrees with minus the second time derivative on single
variables but not on products, and the leftover term survives integration
by parts). See the repository notes for the derivation.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .algebra import casimir_matrix, verify_relations
from .grading import swap_sign
from .mech.gpoly import (
    CONSTANT_DEGREES,
    FIELD_DEGREES,
    REAL_FIELDS,
    FieldVar,
    GPoly,
    GradedConstant,
    _normalize_monomial,
    const,
    fld,
)
from .mech.lagrangians import (
    catalogue,
    catalogue_names,
    euler_lagrange_expr,
    higher_derivative_identity,
    is_total_derivative,
    mechanics_report,
    noether_charges,
    published_action1_display,
    substitute_eom,
)
from .mech.variations import (
    CORE_FRAME,
    FRAMES,
    apply_delta,
    apply_generator,
    generator_rule,
    operator_relations_report,
    squared_z_is_minus_accel,
)
from .modtools import (
    DEFAULT_PANEL,
    PROBE_SEEDS,
    decompose,
    extract_irrep_4d,
    intertwiner_dim,
    invariant_subspace_probe,
    named_block_rep,
)
from .reps import build_DE, build_DEl
from .scalars import GR_ONE, BiPoly, GaussianRational, RationalFunction


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    details: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "number": self.number,
            "title": self.title,
            "passed": self.passed,
            "details": self.details,
        }


def _gr(n: int) -> GaussianRational:
    return GaussianRational.of(n)


# -- 1: relations and Casimir --------------------------------------------------

def check_relations() -> CriterionResult:
    details = []
    ok = True
    lam = RationalFunction.from_poly(BiPoly.var_lam())
    zero = RationalFunction.zero()
    for module, expect_lam in ((build_DEl(), True), (build_DE(), False)):
        rep = module.rep
        report = verify_relations(rep)
        details.append(
            f"{rep.name}: dim {rep.dim}, "
            f"{sum(r.passed for r in report.results)}/{len(report.results)} relations exact, "
            f"grading violations: {len(report.grading_violations)}"
        )
        ok = ok and report.ok and len(report.results) == 21
        cas = casimir_matrix(rep)
        want = lam if expect_lam else zero
        cas_ok = all(
            (cas[r][c] - (want if r == c else zero)).is_zero()
            for r in range(rep.dim)
            for c in range(rep.dim)
        )
        details.append(
            f"{rep.name}: Casimir equals {'lam times identity' if expect_lam else 'zero'}: {cas_ok}"
        )
        ok = ok and cas_ok
    return CriterionResult(1, "defining relations and Casimir on both induced modules", ok, details)


# -- 2/3: decompositions -------------------------------------------------------

def _decomposition(number: int, kind: str, block_dim: int) -> CriterionResult:
    r = decompose(kind)
    details = [
        f"spanning rank {r.spanning_rank}/{r.ambient_dim}",
        f"copies consistent: {r.copies_consistent}",
    ]
    ok = r.ok and all(b.dim == block_dim for b in r.blocks)
    for b in r.blocks:
        line = (
            f"{b.block}: dim {b.dim}, closure {b.closure_passed}, "
            f"relations {b.relations_ok}, table matches source {b.matches_paper}"
        )
        if not b.matches_paper:
            line += f" ({len(b.diffs)} table diffs; explained by detected errata)"
        details.append(line)
    for e in r.errata:
        details.append(
            f"erratum ({e.kind}) at {e.location}: printed {e.printed}, corrected {e.corrected}"
        )
    for u in r.unrepaired:
        details.append(f"unrepaired: {u}")
        ok = False
    mismatch_explained = all(
        b.matches_paper or (b.closure_passed and b.relations_ok) for b in r.blocks
    )
    title = (
        f"{r.ambient_dim}-dim module splits into four closed {block_dim}-dim blocks, "
        "tables regenerated"
    )
    return CriterionResult(number, title, ok and mismatch_explained, details)


def check_decompose_16() -> CriterionResult:
    return _decomposition(2, "DE", 4)


def check_decompose_32() -> CriterionResult:
    return _decomposition(3, "DEl", 8)


# -- 4: invariant-subspace dimension criterion ---------------------------------

def check_probe_panel() -> CriterionResult:
    details = []
    ok = True
    for block in ("D1", "D2"):
        c1_rf, c2_rf = PROBE_SEEDS[block]
        for e_int, l_int in DEFAULT_PANEL:
            e0, l0 = _gr(e_int), _gr(l_int)
            c1, c2 = c1_rf.specialize(e0, l0), c2_rf.specialize(e0, l0)
            rep = invariant_subspace_probe(block, e0, l0, c1, c2)
            on = (l0 - e0 * e0).is_zero()
            want = 4 if on else 8
            good = rep.closure_dim == want and rep.ok
            details.append(
                f"{block} at (E,lam)=({e0},{l0}) seed ({c1},{c2}): closure dim "
                f"{rep.closure_dim} (expected {want}), witnesses proportional "
                f"{rep.witnesses_proportional}, witnesses match source {rep.witnesses_match_paper}"
            )
            ok = ok and good and rep.witnesses_match_paper
            if on:
                ok = ok and rep.witnesses_proportional
    # misaligned seed on the locus must NOT close to 4
    for block, flip in (("D1", (_gr(1), _gr(0))), ("D2", (_gr(0), _gr(1)))):
        rep = invariant_subspace_probe(block, _gr(2), _gr(4), *flip)
        details.append(
            f"{block} on-locus with misaligned seed {tuple(map(str, flip))}: closure dim {rep.closure_dim}"
        )
        ok = ok and rep.closure_dim == 8
    return CriterionResult(
        4, "closure dimension is 4 exactly on the locus with the aligned seed", ok, details
    )


# -- 5: inequivalence ----------------------------------------------------------

def check_intertwiners() -> CriterionResult:
    details = []
    ok = True
    d1, d2 = named_block_rep("D1"), named_block_rep("D2")
    off_locus = [(1, 2), (2, 3), (3, -1)]
    for e_int, l_int in off_locus:
        e0, l0 = _gr(e_int), _gr(l_int)
        dim = intertwiner_dim(d1, d2, e0, l0)
        self1 = intertwiner_dim(d1, d1, e0, l0)
        details.append(
            f"8-dim blocks at (E,lam)=({e0},{l0}): intertwiner dim {dim} (self {self1})"
        )
        ok = ok and dim == 0 and self1 == 1
    de_blocks = [named_block_rep(f"DE-D{k}") for k in (1, 2, 3, 4)]
    e0, l0 = _gr(2), _gr(1)
    for a in range(4):
        for b in range(a + 1, 4):
            dim = intertwiner_dim(de_blocks[a], de_blocks[b], e0, l0)
            details.append(f"4-dim blocks D{a+1} vs D{b+1} at E={e0}: intertwiner dim {dim}")
            ok = ok and dim == 0
    return CriterionResult(
        5, "zero intertwiners certify pairwise inequivalence", ok, details
    )


# -- 6: rescaled 4-dim irreps ---------------------------------------------------

def check_extract_4d() -> CriterionResult:
    details = []
    ok = True
    for block in ("D1", "D2"):
        for rescaled in (False, True):
            rep = extract_irrep_4d(block, rescaled)
            details.append(
                f"{rep.block}: closure {rep.closure_passed}, relations {rep.relations_ok}, "
                f"table matches source {rep.matches_paper} ({len(rep.diffs)} diffs)"
            )
            ok = ok and rep.closure_passed and rep.relations_ok and rep.matches_paper
    return CriterionResult(
        6, "locus irreps reproduce the published scaled action tables exactly", ok, details
    )


# -- 7: operator algebra on fields ---------------------------------------------

def check_field_operator_algebra() -> CriterionResult:
    details = []
    report = operator_relations_report(CORE_FRAME)
    bad = [name for name, good in report if not good]
    ok = len(report) == 21 and not bad
    details.append(f"core frame: {len(report) - len(bad)}/{len(report)} relations hold")
    if bad:
        details.append("failing: " + ", ".join(bad))
    sq = squared_z_is_minus_accel(CORE_FRAME)
    details.append(f"(1,1) derivation squares to minus the second time derivative: {sq}")
    ok = ok and sq
    for name, frame in FRAMES.items():
        if name == "core":
            continue
        frame_bad = [n for n, good in operator_relations_report(frame) if not good]
        details.append(f"{name} frame: {'all hold' if not frame_bad else 'FAIL ' + str(frame_bad)}")
        ok = ok and not frame_bad
    return CriterionResult(
        7, "generator derivations satisfy every relation with H = i d/dt", ok, details
    )


# -- 8: invariance of the catalogue --------------------------------------------

def check_invariance() -> CriterionResult:
    details = []
    ok = True
    for name in catalogue_names():
        L = catalogue(name)
        for dl in ("delta10", "delta01", "delta11"):
            var = apply_delta(dl, L.expr, L.frame)
            verdict, witness = is_total_derivative(var)
            if verdict:
                exact = (witness.ddt() - var).is_zero()
                details.append(f"{name} under {dl}: total derivative, witness verified {exact}")
                ok = ok and exact
            else:
                els = [
                    base + ("bar" if bar else "")
                    for base, bar in sorted(var.field_vars())
                    if not euler_lagrange_expr(var, base, bar).is_zero()
                ]
                details.append(
                    f"{name} under {dl}: NOT a total derivative "
                    f"(variational derivative nonzero along {', '.join(els)})"
                )
                ok = False
    return CriterionResult(
        8, "all three variations of every catalogue Lagrangian are total derivatives", ok, details
    )


# -- 9: Noether charges ---------------------------------------------------------

def check_charges() -> CriterionResult:
    details = []
    ok = True
    for name in ("L0", "L1", "L2", "L3", "L4"):
        rep = mechanics_report(name)
        for ch in rep.charges:
            details.append(
                f"{name} {ch.generator}: conserved {ch.conserved}, degree ok {ch.degree_ok}, "
                f"matches source {ch.matches_paper} (constant {ch.constant}"
                + (", after auxiliary equations of motion" if ch.used_eom else "")
                + ")"
            )
            ok = ok and ch.conserved and ch.degree_ok and bool(ch.matches_paper)
    zero_cases = {("L1", "Zgen"), ("L4", "Zgen")}
    for lname, gname in sorted(zero_cases):
        expr = next(c.expr for c in mechanics_report(lname).charges if c.generator == gname)
        details.append(f"{lname} {gname} charge is identically zero: {expr == '0'}")
        ok = ok and expr == "0"
    l0 = mechanics_report("L0")
    nonzero = all(c.expr != "0" for c in l0.charges)
    details.append(f"L0: all five charges nonzero: {nonzero}")
    ok = ok and nonzero
    l2 = catalogue("L2")
    z2 = noether_charges(l2).charges["Zgen"].expr
    onshell = substitute_eom(z2, l2, ["A"])
    details.append(f"L2 (1,1) charge after A equation of motion: {onshell.render()}")
    ok = ok and onshell.is_zero()
    l4 = catalogue("L4")
    z4 = substitute_eom(noether_charges(l4).charges["Zgen"].expr, l4, ["a", "abar"])
    details.append(f"L4 (1,1) charge after auxiliary equations of motion: {z4.render()}")
    ok = ok and z4.is_zero()
    return CriterionResult(
        9, "Noether charges match the published tables up to one constant each", ok, details
    )


# -- 10: higher-derivative identity ---------------------------------------------

def check_higher_derivative_identity() -> CriterionResult:
    g = const("mu") * fld("x") * fld("x", 0, True)
    ok = higher_derivative_identity(g)
    details = [
        "identity checked in its degree-consistent form: the partial composition "
        "includes the (1,0) derivation so both sides carry degree (1,0)",
        f"exact equality: {ok}",
    ]
    disp = is_total_derivative(catalogue("Lg").expr - published_action1_display())[0]
    details.append(f"composed Lagrangian matches the published closed form modulo a total derivative: {disp}")
    return CriterionResult(
        10, "the (1,0) supercharge sends the composed Lagrangian to an exact derivative",
        ok and disp, details,
    )


# -- 11: property suites ---------------------------------------------------------

_BASES = tuple(FIELD_DEGREES)
_CORE_BASES = ("x", "z", "psi", "xi")
_CONSTS = tuple(CONSTANT_DEGREES)


def _random_symbol(rng: random.Random, core_only: bool = False):
    if rng.random() < 0.3:
        return GradedConstant(rng.choice(_CONSTS))
    base = rng.choice(_CORE_BASES if core_only else _BASES)
    bar = rng.random() < 0.5 and base not in REAL_FIELDS
    return FieldVar(base, bar, rng.randrange(0, 3))


def _random_monomial(rng: random.Random, max_len: int = 5, core_only: bool = False):
    return tuple(
        _random_symbol(rng, core_only) for _ in range(rng.randrange(1, max_len + 1))
    )


def _reference_normalize(rng: random.Random, syms):
    """Normalize by random adjacent swaps: any swap order must agree."""
    sign = 1
    work = list(syms)
    while True:
        inversions = [
            k for k in range(len(work) - 1)
            if work[k].sort_key() > work[k + 1].sort_key()
        ]
        if not inversions:
            break
        k = rng.choice(inversions)
        a, b = work[k], work[k + 1]
        sign *= swap_sign(a.degree, b.degree)
        work[k], work[k + 1] = b, a
    for k in range(len(work) - 1):
        a, b = work[k], work[k + 1]
        if a == b and a.degree.is_self_odd():
            return None
    return sign, tuple(work)


def _random_poly(rng: random.Random, terms: int = 2, core_only: bool = False) -> GPoly:
    out = GPoly.zero()
    for _ in range(terms):
        coeff = GaussianRational.of(rng.randrange(-3, 4), rng.randrange(-2, 3))
        if coeff.is_zero():
            coeff = GR_ONE
        out = out + GPoly.from_terms([(_random_monomial(rng, 3, core_only), coeff)])
    return out


def _random_homogeneous(rng: random.Random) -> GPoly:
    """A nonzero single-monomial (hence graded-homogeneous) core polynomial."""
    while True:
        coeff = GaussianRational.of(rng.randrange(-3, 4), rng.randrange(-2, 3))
        if coeff.is_zero():
            coeff = GR_ONE
        p = GPoly.from_terms([(_random_monomial(rng, 3, core_only=True), coeff)])
        if not p.is_zero():
            return p


def _random_rf(rng: random.Random) -> RationalFunction:
    e, lam = BiPoly.var_E(), BiPoly.var_lam()
    def poly():
        p = BiPoly.const(GaussianRational.of(rng.randrange(-2, 3)))
        if rng.random() < 0.7:
            p = p + e.scale(GaussianRational.of(rng.randrange(-2, 3)))
        if rng.random() < 0.5:
            p = p + lam.scale(GaussianRational.of(rng.randrange(-2, 3)))
        return p
    num_ = poly()
    den = poly()
    if den.is_zero():
        den = BiPoly.const(GR_ONE)
    return RationalFunction.make(num_, den)


def check_property_suites() -> CriterionResult:
    rng = random.Random(20260819)
    details = []
    ok = True

    agree = 0
    for _ in range(1000):
        syms = _random_monomial(rng)
        got = _normalize_monomial(syms)
        ref = _reference_normalize(rng, syms)
        if got == ref:
            agree += 1
    details.append(f"normalization confluence: {agree}/1000 random monomials agree")
    ok = ok and agree == 1000

    leibniz = 0
    labels = ("Q10", "Q10d", "Q01", "Q01d", "Zgen")
    for k in range(500):
        f = _random_homogeneous(rng)
        h = _random_poly(rng, core_only=True)
        lab = labels[k % 5]
        s = swap_sign(generator_rule(lab).degree, f.homogeneous_degree())
        fh = apply_generator(lab, f * h)
        split = apply_generator(lab, f) * h + (f * apply_generator(lab, h)).scale(
            GR_ONE if s == 1 else -GR_ONE
        )
        if (fh - split).is_zero():
            leibniz += 1
    details.append(f"graded Leibniz rule: {leibniz}/500 random pairs agree")
    ok = ok and leibniz == 500

    conj = sum(
        (lambda p: (p.conjugate().conjugate() - p).is_zero())(_random_poly(rng, 3))
        for _ in range(200)
    )
    details.append(f"conjugation is an involution: {conj}/200 random polynomials")
    ok = ok and conj == 200

    one = RationalFunction.one()
    axioms = 0
    for _ in range(300):
        a, b, c = _random_rf(rng), _random_rf(rng), _random_rf(rng)
        good = (
            ((a + b) - (b + a)).is_zero()
            and ((a + (b + c)) - ((a + b) + c)).is_zero()
            and ((a * b) - (b * a)).is_zero()
            and ((a * (b * c)) - ((a * b) * c)).is_zero()
            and ((a * (b + c)) - (a * b + a * c)).is_zero()
        )
        if good and not a.is_zero():
            inv = one / a
            good = ((a * inv) - one).is_zero()
        axioms += good
    details.append(f"field axioms on rational functions: {axioms}/300 random triples")
    ok = ok and axioms == 300

    return CriterionResult(11, "randomized property suites", ok, details)


CRITERIA = (
    check_relations,
    check_decompose_16,
    check_decompose_32,
    check_probe_panel,
    check_intertwiners,
    check_extract_4d,
    check_field_operator_algebra,
    check_invariance,
    check_charges,
    check_higher_derivative_identity,
    check_property_suites,
)


def run_all() -> list[CriterionResult]:
    """Run the full suite in dependency order."""
    return [fn() for fn in CRITERIA]
