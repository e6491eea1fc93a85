"""The two induced modules: transcription checksums, grading, Casimir."""
from z2tk.algebra import Generator, casimir_matrix
from z2tk.linalg import mat_mul
from z2tk.reps import build_DE, build_DEl, casimir_eval
from z2tk.scalars import BiPoly, RationalFunction

# Nonzero-entry counts per generator matrix, frozen after the first verified
# build; any transcription edit must re-derive them.
NONZERO_COUNTS = {
    "DEl": {"H": 32, "Z": 32, "Q10": 52, "Q10d": 44, "Q01": 44, "Q01d": 52},
    "DE": {"H": 16, "Z": 0, "Q10": 16, "Q10d": 13, "Q01": 13, "Q01d": 16},
}


def _nonzero(mat):
    return sum(1 for row in mat for c in row if not c.is_zero())


def test_dimensions_and_labels():
    del_, de = build_DEl(), build_DE()
    assert del_.rep.dim == 32 and len(del_.labels) == 32
    assert de.rep.dim == 16 and len(de.labels) == 16
    for module in (del_, de):
        for k, lab in enumerate(module.labels):
            assert module.position(str(lab)) == k


def test_nonzero_entry_checksums():
    for module, key in ((build_DEl(), "DEl"), (build_DE(), "DE")):
        got = {g.value: _nonzero(m) for g, m in module.rep.mats.items()}
        assert got == NONZERO_COUNTS[key]


def test_grading_clean_on_both_modules():
    assert build_DEl().rep.grading_violations() == []
    assert build_DE().rep.grading_violations() == []


def test_casimir_eigenvalues():
    lam = RationalFunction.from_poly(BiPoly.var_lam())
    assert casimir_eval(build_DEl()) == lam
    assert casimir_eval(build_DE()) == RationalFunction.zero()


def test_casimir_matrix_is_scalar():
    rep = build_DEl().rep
    cas = casimir_matrix(rep)
    lam = RationalFunction.from_poly(BiPoly.var_lam())
    for r in range(rep.dim):
        for c in range(rep.dim):
            want = lam if r == c else RationalFunction.zero()
            assert cas[r][c] == want


def test_z_anticommutes_with_q10_columnwise():
    rep = build_DEl().rep
    z, q = rep.mats[Generator.Z], rep.mats[Generator.Q10]
    zq, qz = mat_mul(z, q), mat_mul(q, z)
    for col in range(rep.dim):
        for row in range(rep.dim):
            assert (zq[row][col] + qz[row][col]).is_zero()
