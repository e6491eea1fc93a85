"""The defining relations, bracket machinery and the graded Jacobi identity."""
import random

from z2tk.algebra import (
    Generator,
    MatrixRep,
    casimir_matrix,
    general_bracket,
    relation_list,
    verify_relations,
)
from z2tk.grading import swap_sign
from z2tk.linalg import mat_add, mat_mul, mat_sub
from z2tk.modtools import named_block_rep
from z2tk.reps import build_DE, build_DEl
from z2tk.scalars import GaussianRational, RationalFunction

GENS = list(Generator)


def test_relation_list_has_21_entries():
    rels = relation_list()
    assert len(rels) == 21
    names = [r.name for r in rels]
    assert len(set(names)) == 21


def test_bracket_type_follows_the_degrees():
    for r in relation_list():
        assert r.is_anti == (r.left.degree.dot(r.right.degree) == 1)
        assert r.name.startswith("{" if r.is_anti else "[")


def test_relations_hold_on_both_induced_modules():
    for module in (build_DEl(), build_DE()):
        report = verify_relations(module.rep)
        assert report.ok
        assert len(report.results) == 21
        assert not report.grading_violations
        for r in report.results:
            assert r.residual_nonzero == []


def test_corrupted_entry_is_detected():
    rep = build_DE().rep
    mats = {g: [row[:] for row in m] for g, m in rep.mats.items()}
    row, col = next(
        (r, c)
        for r in range(rep.dim)
        for c in range(rep.dim)
        if not mats[Generator.Q10][r][c].is_zero()
    )
    mats[Generator.Q10][row][col] = mats[Generator.Q10][row][col] * RationalFunction.of(2)
    bad = MatrixRep(rep.dim, rep.basis_degrees, mats, name="DE-corrupted")
    report = verify_relations(bad)
    assert not report.grading_violations
    assert not report.ok
    failing = [r for r in report.results if not r.passed]
    assert failing
    assert all(r.residual_nonzero for r in failing)


def test_bracket_respects_degree_additivity():
    rep = build_DE().rep
    degs = rep.basis_degrees
    for g1 in GENS:
        for g2 in GENS:
            want = g1.degree + g2.degree
            mat = general_bracket(rep.mats, g1, g2)
            for r in range(rep.dim):
                for c in range(rep.dim):
                    if not mat[r][c].is_zero():
                        assert degs[r] == degs[c] + want


def test_casimir_is_z_squared():
    rep = build_DE().rep
    zz = mat_mul(rep.mats[Generator.Z], rep.mats[Generator.Z])
    assert casimir_matrix(rep) == zz


# -- graded Jacobi identity (free property; not one of the stored relations) -------

def _bracket(m1, d1, m2, d2):
    ab, ba = mat_mul(m1, m2), mat_mul(m2, m1)
    return mat_add(ab, ba) if swap_sign(d1, d2) == -1 else mat_sub(ab, ba)


def _jacobi_holds(mats, degrees, a, b, c):
    da, db, dc = degrees[a], degrees[b], degrees[c]
    total = None
    for (x, y, z) in ((a, b, c), (b, c, a), (c, a, b)):
        dx, dy, dz = degrees[x], degrees[y], degrees[z]
        inner = _bracket(mats[y], dy, mats[z], dz)
        outer = _bracket(mats[x], dx, inner, dy + dz)
        signed = outer if swap_sign(dx, dz) == 1 else [[-e for e in row] for row in outer]
        total = signed if total is None else mat_add(total, signed)
    return all(e.is_zero() for row in total for e in row)


def _specialized(rep, e0, l0):
    point = (GaussianRational.of(e0), GaussianRational.of(l0))
    return {
        g: [[c.specialize(*point) for c in row] for row in m]
        for g, m in rep.mats.items()
    }


def test_jacobi_on_a_4dim_block_all_triples():
    rep = named_block_rep("DE-D1")
    degrees = {g: g.degree for g in GENS}
    for a in GENS:
        for b in GENS:
            for c in GENS:
                assert _jacobi_holds(rep.mats, degrees, a, b, c)


def test_jacobi_on_the_induced_modules_sampled():
    rng = random.Random(1105)
    degrees = {g: g.degree for g in GENS}
    for rep, e0, l0, n in ((build_DE().rep, 2, 0, 30), (build_DEl().rep, 2, 3, 12)):
        mats = _specialized(rep, e0, l0)
        for _ in range(n):
            a, b, c = rng.choice(GENS), rng.choice(GENS), rng.choice(GENS)
            assert _jacobi_holds(mats, degrees, a, b, c)
