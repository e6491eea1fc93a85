"""Block decompositions, erratum repair, the locus probe and intertwiners."""
import random

import pytest

from z2tk.algebra import Generator, verify_relations
from z2tk.modtools import (
    DEFAULT_PANEL,
    PROBE_SEEDS,
    apply_matrix,
    change_of_basis,
    decompose,
    extract_irrep_4d,
    intertwiner_dim,
    invariant_subspace_probe,
    named_block_rep,
    rref_subspace,
    submodule_closure,
)
from z2tk.reps import build_DE, build_DEl
from z2tk.scalars import GaussianRational, RationalFunction

GR = GaussianRational.of

# Misprints detected and repaired during table regeneration, frozen by
# location; the derivation text is free-form and not pinned.
EXPECTED_ERRATA = {
    "DE": [
        ("basis-vector", "D2 basis vector sigma"),
        ("table-entry", "D4 action table, Q01 on sigma"),
    ],
    "DEl": [
        ("basis-vector", "D1b basis vector sigma1"),
        ("basis-vector", "D1b basis vector chi1"),
        ("basis-vector", "D1b basis vector chi2"),
        ("basis-vector", "D2a basis vector v1"),
        ("table-entry", "D2a action table, Q10d on sigma1"),
        ("basis-vector", "D2b basis vector v2"),
        ("basis-vector", "D2b basis vector v1"),
        ("table-entry", "D2b action table, Q10d on sigma1"),
    ],
}


def test_decompose_16_into_four_4dim_blocks():
    r = decompose("DE")
    assert r.ok
    assert r.ambient_dim == 16 and r.spanning_rank == 16
    assert [b.dim for b in r.blocks] == [4, 4, 4, 4]
    assert sum(b.dim for b in r.blocks) == 16
    assert all(b.closure_passed and b.relations_ok for b in r.blocks)


def test_decompose_32_into_four_8dim_blocks():
    r = decompose("DEl")
    assert r.ok
    assert r.ambient_dim == 32 and r.spanning_rank == 32
    assert [b.dim for b in r.blocks] == [8, 8, 8, 8]
    assert r.copies_consistent
    assert all(b.closure_passed and b.relations_ok for b in r.blocks)


def test_errata_are_the_frozen_list():
    for kind in ("DE", "DEl"):
        r = decompose(kind)
        got = [(e.kind, e.location) for e in r.errata]
        assert got == EXPECTED_ERRATA[kind]
        assert r.unrepaired == []
        for e in r.errata:
            assert e.printed != e.corrected
            assert e.derivation


def test_mismatching_blocks_are_exactly_the_erratum_ones():
    r = decompose("DE")
    flagged = {b.block for b in r.blocks if not b.matches_paper}
    assert flagged == {"D2", "D4"}
    r32 = decompose("DEl")
    flagged32 = {b.block for b in r32.blocks if not b.matches_paper}
    assert flagged32 == {"D1b", "D2a", "D2b"}


def test_block_reps_pass_relations_independently():
    for name in ("D1", "D2", "DE-D1", "DE-D2", "DE-D3", "DE-D4"):
        report = verify_relations(named_block_rep(name))
        assert report.ok, name


def test_named_block_rep_rejects_unknown():
    with pytest.raises(ValueError):
        named_block_rep("bogus")
    with pytest.raises(ValueError):
        named_block_rep("DE-D5")


# -- closure properties -------------------------------------------------------------

def _specialized_mats(rep, e0, l0):
    return {
        g: [[c.specialize(e0, l0) for c in row] for row in m]
        for g, m in rep.mats.items()
    }


def _random_vec(rng, dim):
    return [GR(rng.randrange(-2, 3)) for _ in range(dim)]


def test_closure_idempotent_and_monotone():
    rep = build_DEl().rep
    mats = _specialized_mats(rep, GR(2), GR(3))
    rng = random.Random(20260819)
    for _ in range(5):
        seeds = [_random_vec(rng, rep.dim)]
        closed = submodule_closure(mats, seeds, rep.dim)
        again = submodule_closure(mats, closed.basis, rep.dim)
        assert again.dim == closed.dim
        # seeds lie inside: appending them does not grow the span
        assert rref_subspace(closed.basis + seeds, rep.dim).dim == closed.dim
        # stability: images of basis vectors stay inside
        extra = [apply_matrix(m, v) for v in closed.basis for m in mats.values()]
        assert rref_subspace(closed.basis + extra, rep.dim).dim == closed.dim


def test_closure_dims_are_multiples_of_the_block_size():
    # the 16-dim module splits into pairwise inequivalent 4-dim irreducibles,
    # so every invariant subspace has dimension divisible by 4; off the
    # lam = E^2 locus the 32-dim module is built from 8-dim irreducibles
    rng = random.Random(7)
    rep16 = build_DE().rep
    mats16 = _specialized_mats(rep16, GR(2), GR(1))
    for _ in range(6):
        closed = submodule_closure(mats16, [_random_vec(rng, 16)], 16)
        assert closed.dim % 4 == 0 and closed.dim > 0
    rep32 = build_DEl().rep
    mats32 = _specialized_mats(rep32, GR(2), GR(3))
    for _ in range(4):
        closed = submodule_closure(mats32, [_random_vec(rng, 32)], 32)
        assert closed.dim % 8 == 0 and closed.dim > 0


# -- the locus probe ------------------------------------------------------------------

def test_probe_panel_matches_the_iff_criterion():
    for block in ("D1", "D2"):
        c1_rf, c2_rf = PROBE_SEEDS[block]
        for e_int, l_int in DEFAULT_PANEL:
            e0, l0 = GR(e_int), GR(l_int)
            rep = invariant_subspace_probe(
                block, e0, l0, c1_rf.specialize(e0, l0), c2_rf.specialize(e0, l0)
            )
            on_locus = l_int == e_int * e_int
            assert rep.on_locus == on_locus
            assert rep.seed_aligned
            assert rep.expected_dim == (4 if on_locus else 8)
            assert rep.closure_dim == rep.expected_dim
            assert rep.ok
            assert rep.witnesses_match_paper
            if on_locus:
                assert rep.witnesses_proportional
                assert rep.invariant_basis is not None
                assert len(rep.invariant_basis) == 4


def test_probe_misaligned_seed_fails_to_shrink():
    rep = invariant_subspace_probe("D1", GR(2), GR(4), GR(1), GR(0))
    assert rep.on_locus and not rep.seed_aligned
    assert rep.closure_dim == 8
    rep2 = invariant_subspace_probe("D2", GR(2), GR(4), GR(0), GR(1))
    assert rep2.closure_dim == 8


def test_probe_generic_seed_off_locus():
    rep = invariant_subspace_probe("D1", GR(1), GR(2), GR(1), GR(1))
    assert not rep.on_locus
    assert rep.closure_dim == 8


def test_probe_guards():
    with pytest.raises(ValueError):
        invariant_subspace_probe("D3", GR(1), GR(1), GR(0), GR(1))
    with pytest.raises(ValueError):
        invariant_subspace_probe("D1", GR(1), GR(1), GR(0), GR(0))
    with pytest.raises(ValueError):
        invariant_subspace_probe("D1", GR(0), GR(1), GR(0), GR(1))
    with pytest.raises(ValueError):
        invariant_subspace_probe("D1", GR(1), GR(0), GR(0), GR(1))


# -- intertwiners ----------------------------------------------------------------------

def test_8dim_blocks_are_inequivalent_off_locus():
    d1, d2 = named_block_rep("D1"), named_block_rep("D2")
    for e, l in ((1, 2), (2, 3), (3, -1)):
        assert intertwiner_dim(d1, d2, GR(e), GR(l)) == 0
        assert intertwiner_dim(d1, d1, GR(e), GR(l)) == 1
        assert intertwiner_dim(d2, d2, GR(e), GR(l)) == 1


def test_4dim_blocks_pairwise_inequivalent():
    reps = [named_block_rep(f"DE-D{k}") for k in (1, 2, 3, 4)]
    for a in range(4):
        assert intertwiner_dim(reps[a], reps[a], GR(2), GR(1)) == 1
        for b in range(a + 1, 4):
            assert intertwiner_dim(reps[a], reps[b], GR(2), GR(1)) == 0


# -- 4-dim extraction on the locus -------------------------------------------------------

def test_extract_irrep_4d_tables():
    for block in ("D1", "D2"):
        for rescaled in (False, True):
            rep = extract_irrep_4d(block, rescaled)
            assert rep.dim == 4
            assert rep.closure_passed and rep.relations_ok
            assert rep.matches_paper and rep.diffs == []
    assert extract_irrep_4d("D1", True) is extract_irrep_4d("D1", True)
    with pytest.raises(ValueError):
        extract_irrep_4d("D3")


# -- change of basis ----------------------------------------------------------------------

def test_change_of_basis_identity_reproduces_action():
    module = build_DE()
    n = module.rep.dim
    identity_vecs = [
        [RationalFunction.of(1 if i == j else 0) for i in range(n)] for j in range(n)
    ]
    labels = tuple(str(lab) for lab in module.labels)
    reports = change_of_basis(module, [("all", labels, identity_vecs)])
    assert len(reports) == 1
    rep = reports[0]
    assert rep["dim"] == n
    assert rep["closure_passed"] and rep["leaks"] == []
    q10 = module.rep.mats[Generator.Q10]
    table = rep["action_table"]["Q10"]
    for j, src in enumerate(labels):
        entry = table[src]
        expected = {
            labels[i]: str(q10[i][j]) for i in range(n) if not q10[i][j].is_zero()
        }
        assert entry == expected


def test_change_of_basis_requires_full_basis():
    module = build_DE()
    with pytest.raises(ValueError):
        change_of_basis(module, [("tiny", ("a",), [[RationalFunction.of(1)] * 16])])
