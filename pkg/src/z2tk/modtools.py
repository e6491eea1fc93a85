"""Decomposition toolkit: closure, change of basis, probes, intertwiners.

Everything here works on coordinate columns over either the symbolic scalar
field or a pole-free specialization of it. The central object is a block
decomposition: a named list of basis vectors per block together with the
block's action table. Transcribed tables and bases are checked mechanically;
any entry that breaks closure is repaired from the surrounding consistent
data and reported as an erratum finding, so the canonical tables shipped by
this module are always machine-verified.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .algebra import Generator, MatrixRep, verify_relations
from .bases import (
    PROBE_SEEDS,
    SUB4_RAW,
    SUB4_SCALING,
    VEC16_BLOCKS,
    VEC32_BLOCKS,
)
from .grading import DEG_00, DEG_01, DEG_10, DEG_11, Degree
from .linalg import mat_inverse, rref, solve
from .reps import InducedModule, build_DE, build_DEl
from .scalars import RF_E, BiPoly, GaussianRational, RationalFunction
from .tables import (
    BLOCK16_TABLES,
    BLOCK32_TABLES,
    PROBE_WITNESSES,
    SUB4_RAW_TABLES,
    SUB4_SCALED_TABLES,
    Table,
)

__all__ = [
    "Subspace",
    "rref_subspace",
    "submodule_closure",
    "Erratum",
    "BlockReport",
    "DecompositionReport",
    "decompose",
    "change_of_basis",
    "block_rep",
    "extract_irrep_4d",
    "ProbeReport",
    "invariant_subspace_probe",
    "intertwiner_dim",
    "DEFAULT_PANEL",
    "specialize_matrix",
    "specialize_vector",
]

# The four generators that can move a vector between graded components, plus
# the exchange generator; the Hamiltonian acts as a scalar on both modules
# and never enlarges a span.
_ACTIVE = (Generator.Q10, Generator.Q10d, Generator.Q01, Generator.Q01d, Generator.Z)

# Default specialization panel: three points off the lam = E^2 locus, two on it.
DEFAULT_PANEL: tuple[tuple[int, int], ...] = ((1, 2), (2, 3), (3, -1), (1, 1), (2, 4))

BLOCK16_LABELS = ("v", "u", "chi", "sigma")
BLOCK16_DEGREES = (DEG_00, DEG_11, DEG_10, DEG_01)
BLOCK32_LABELS = ("v1", "v2", "u1", "u2", "chi1", "chi2", "sigma1", "sigma2")
BLOCK32_DEGREES = (DEG_00, DEG_00, DEG_11, DEG_11, DEG_10, DEG_10, DEG_01, DEG_01)


# -- coordinate plumbing -----------------------------------------------------

def dict_to_coords(module: InducedModule, vec: dict[str, RationalFunction]) -> list[RationalFunction]:
    out = [RationalFunction.zero()] * module.rep.dim
    for label, c in vec.items():
        out[module.position(label)] = c
    return out


def coords_to_dict(labels, coords) -> dict[str, str]:
    return {str(labels[k]): str(c) for k, c in enumerate(coords) if not c.is_zero()}


def apply_matrix(m, coords):
    """m @ x for a coordinate column, skipping zero coordinates."""
    n = len(m)
    zero = coords[0].zero() if hasattr(coords[0], "zero") else type(coords[0]).zero()
    out = [zero] * n
    for j, x in enumerate(coords):
        if x.is_zero():
            continue
        for i in range(n):
            mij = m[i][j]
            if not mij.is_zero():
                out[i] = out[i] + mij * x
    return out


def vec_add(a, b):
    return [x + y for x, y in zip(a, b)]


def vec_scale(a, c):
    return [c * x for x in a]


def vec_eq(a, b) -> bool:
    return all((x - y).is_zero() for x, y in zip(a, b))


def vec_is_zero(a) -> bool:
    return all(x.is_zero() for x in a)


def specialize_vector(coords, e0: GaussianRational, l0: GaussianRational):
    return [c.specialize(e0, l0) for c in coords]


def specialize_matrix(m, e0: GaussianRational, l0: GaussianRational):
    return [[c.specialize(e0, l0) for c in row] for row in m]


def gr_of(x) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    return GaussianRational.of(Fraction(x))


# -- subspaces ---------------------------------------------------------------

@dataclass
class Subspace:
    """A subspace stored as a unique reduced-row-echelon basis."""

    ambient_dim: int
    basis: list[list]
    pivots: list[int]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, coords) -> bool:
        r = list(coords)
        for row, p in zip(self.basis, self.pivots):
            c = r[p]
            if not c.is_zero():
                r = [x - c * y for x, y in zip(r, row)]
        return all(x.is_zero() for x in r)

    def to_json(self) -> dict:
        return {
            "ambient_dim": self.ambient_dim,
            "dim": self.dim,
            "pivots": list(self.pivots),
            "basis": [[str(c) for c in row] for row in self.basis],
        }


def rref_subspace(vectors, ambient_dim: int) -> Subspace:
    rows = [list(v) for v in vectors if not vec_is_zero(v)]
    if not rows:
        return Subspace(ambient_dim, [], [])
    red, piv = rref(rows)
    return Subspace(ambient_dim, red, piv)


def submodule_closure(mats, seeds, ambient_dim: int) -> Subspace:
    """Smallest subspace containing the seeds and stable under all generators.

    ``mats`` maps generators to matrices (symbolic or specialized); iterated
    application with re-reduction until the dimension stops growing.
    """
    space = rref_subspace(seeds, ambient_dim)
    while True:
        extra = []
        for g in _ACTIVE:
            m = mats[g]
            for row in space.basis:
                img = apply_matrix(m, row)
                if not space.contains(img):
                    extra.append(img)
        if not extra:
            return space
        space = rref_subspace(space.basis + extra, ambient_dim)


# -- erratum detection and repair -------------------------------------------

@dataclass
class Erratum:
    """A mechanically detected misprint with its machine-derived correction."""

    location: str
    kind: str  # "basis-vector" | "table-entry"
    printed: str
    corrected: str
    derivation: str

    def to_json(self) -> dict:
        return {
            "location": self.location,
            "kind": self.kind,
            "printed": self.printed,
            "corrected": self.corrected,
            "derivation": self.derivation,
        }


@dataclass
class _BlockState:
    """Mutable working copy of one block during detection/repair."""

    name: str
    labels: tuple[str, ...]
    degrees: tuple[Degree, ...]
    vectors: list[list[RationalFunction]]
    table: dict[Generator, dict[str, dict[str, RationalFunction]]]

    def pos(self, label: str) -> int:
        return self.labels.index(label)


def _expected_image(state: _BlockState, g: Generator, src: str):
    n = len(state.vectors[0])
    out = [RationalFunction.zero()] * n
    for t, c in state.table[g].get(src, {}).items():
        out = vec_add(out, vec_scale(state.vectors[state.pos(t)], c))
    return out


def _failures(state: _BlockState, mats) -> list[tuple[Generator, str]]:
    bad = []
    for g in _ACTIVE:
        for src in state.labels:
            img = apply_matrix(mats[g], state.vectors[state.pos(src)])
            if not vec_eq(img, _expected_image(state, g, src)):
                bad.append((g, src))
    return bad


def _vector_candidates(state: _BlockState, mats, target: str):
    """All reconstructions of one basis vector from table entries hitting it.

    An entry g: src -> {…, target: c, …} with src != target yields the
    candidate (g·src − sum of the other listed terms) / c, trusting the
    other vectors of the block.
    """
    out = []
    for g in _ACTIVE:
        for src, img in state.table[g].items():
            if src == target or target not in img or img[target].is_zero():
                continue
            cand = apply_matrix(mats[g], state.vectors[state.pos(src)])
            for t, c in img.items():
                if t != target:
                    cand = vec_add(cand, vec_scale(state.vectors[state.pos(t)], -c))
            inv = RationalFunction.one() / img[target]
            out.append((vec_scale(cand, inv), f"({g} {src}) row"))
    return out


def _render(labels, coords) -> str:
    bits = [f"{c}*{lab}" for lab, c in zip(labels, coords) if not c.is_zero()]
    return " + ".join(bits) if bits else "0"


@dataclass
class _Option:
    """One proposed basis-vector replacement with its supporting rows."""

    target: str
    candidate: list
    provs: list[str]

    @property
    def votes(self) -> int:
        return len(self.provs)


def _vector_options(state: _BlockState, mats, fails) -> list[_Option]:
    involved: set[str] = set()
    for g, src in fails:
        involved.add(src)
        involved.update(state.table[g].get(src, {}).keys())
    options = []
    for target in state.labels:
        if target not in involved:
            continue
        groups: list[tuple[list, list[str]]] = []
        for cand, prov in _vector_candidates(state, mats, target):
            for grp in groups:
                if vec_eq(grp[0], cand):
                    grp[1].append(prov)
                    break
            else:
                groups.append((cand, [prov]))
        for cand, provs in groups:
            if not vec_eq(cand, state.vectors[state.pos(target)]):
                options.append(_Option(target, cand, provs))
    return options


def _copy_state(state: _BlockState) -> _BlockState:
    return _BlockState(
        name=state.name,
        labels=state.labels,
        degrees=state.degrees,
        vectors=[list(v) for v in state.vectors],
        table={g: {s: dict(i) for s, i in tbl.items()} for g, tbl in state.table.items()},
    )


def _apply_option(state: _BlockState, opt: _Option, module_labels) -> Erratum:
    cur = state.vectors[state.pos(opt.target)]
    err = Erratum(
        location=f"{state.name} basis vector {opt.target}",
        kind="basis-vector",
        printed=_render(module_labels, cur),
        corrected=_render(module_labels, opt.candidate),
        derivation="consensus of " + ", ".join(opt.provs),
    )
    state.vectors[state.pos(opt.target)] = list(opt.candidate)
    return err


def _repair_search(
    state: _BlockState, mats, module_labels, budget: int
) -> tuple[_BlockState, list[Erratum], list[str]]:
    """Drive the block to closure, collecting errata along the way.

    Vector repair accepts a replacement only on a consensus of at least two
    reconstruction rows; when the leading consensus groups tie (misprints in
    two vectors can contaminate rows in a correlated way), the search forks
    on the tied candidates and keeps the branch with the fewest residual
    failures, then the fewest repairs. Rows that no vector repair explains
    are re-expanded over the block basis and recorded as table-entry errata;
    images outside the block span are unrepairable.
    """
    errata: list[Erratum] = []
    for _ in range(12):
        fails = _failures(state, mats)
        if not fails:
            return state, errata, []
        options = [o for o in _vector_options(state, mats, fails) if o.votes >= 2]
        if options:
            best_votes = max(o.votes for o in options)
            top = [o for o in options if o.votes == best_votes]
            if len(top) > 1 and budget > 0:
                outcomes = []
                for k, opt in enumerate(top[:4]):
                    branch = _copy_state(state)
                    first = _apply_option(branch, opt, module_labels)
                    b_state, b_err, b_un = _repair_search(
                        branch, mats, module_labels, budget - 1
                    )
                    outcomes.append(
                        (len(b_un), 1 + len(b_err), k, b_state, [first] + b_err, b_un)
                    )
                outcomes.sort(key=lambda t: t[:3])
                _, _, _, b_state, b_err, b_un = outcomes[0]
                return b_state, errata + b_err, b_un
            errata.append(_apply_option(state, top[0], module_labels))
            continue
        # No convincing vector repair: re-derive the failing table entries.
        cols = [
            [state.vectors[j][i] for j in range(len(state.labels))]
            for i in range(len(state.vectors[0]))
        ]
        progressed = False
        hard: list[str] = []
        for g, src in fails:
            img = apply_matrix(mats[g], state.vectors[state.pos(src)])
            coeffs = solve(cols, img)
            if coeffs is None:
                hard.append(f"{state.name}: {g} {src} leaves the block span")
                continue
            new_entry = {
                state.labels[k]: c for k, c in enumerate(coeffs) if not c.is_zero()
            }
            old = state.table[g].get(src, {})
            if {t: c for t, c in old.items() if not c.is_zero()} == new_entry:
                hard.append(f"{state.name}: {g} {src} is inconsistent")
                continue
            errata.append(Erratum(
                location=f"{state.name} action table, {g} on {src}",
                kind="table-entry",
                printed="; ".join(f"{t}: {c}" for t, c in old.items()) or "0",
                corrected="; ".join(f"{t}: {c}" for t, c in new_entry.items()) or "0",
                derivation=f"re-expanded the image of {src} under {g} in the block basis",
            ))
            state.table[g][src] = new_entry
            progressed = True
        if not progressed:
            return state, errata, hard
    return state, errata, [f"{state.name}: repair did not stabilize"]


def _repair_block(
    state: _BlockState, mats, module_labels
) -> tuple[_BlockState, list[Erratum], list[str]]:
    final, errata, unrepaired = _repair_search(state, mats, module_labels, budget=3)
    if not unrepaired and _failures(final, mats):  # pragma: no cover - safety net
        unrepaired = [f"{final.name}: block is inconsistent after repair"]
    return final, errata, unrepaired


# -- block reports -----------------------------------------------------------

@dataclass
class BlockReport:
    block: str
    dim: int
    labels: tuple[str, ...]
    vectors: list[dict[str, str]]
    action_table: dict[str, dict[str, dict[str, str]]]
    closure_passed: bool
    matches_paper: bool
    diffs: list[dict]
    relations_ok: bool

    def to_json(self) -> dict:
        return {
            "block": self.block,
            "dim": self.dim,
            "labels": list(self.labels),
            "vectors": self.vectors,
            "action_table": self.action_table,
            "closure_passed": self.closure_passed,
            "matches_paper": self.matches_paper,
            "diffs": self.diffs,
            "relations_ok": self.relations_ok,
        }


@dataclass
class DecompositionReport:
    module: str
    ambient_dim: int
    spanning_rank: int
    blocks: list[BlockReport]
    errata: list[Erratum]
    copies_consistent: bool
    unrepaired: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            self.spanning_rank == self.ambient_dim
            and not self.unrepaired
            and self.copies_consistent
            and all(b.closure_passed and b.relations_ok for b in self.blocks)
        )

    def to_json(self) -> dict:
        return {
            "module": self.module,
            "ambient_dim": self.ambient_dim,
            "spanning_rank": self.spanning_rank,
            "blocks": [b.to_json() for b in self.blocks],
            "errata": [e.to_json() for e in self.errata],
            "copies_consistent": self.copies_consistent,
            "unrepaired": self.unrepaired,
            "ok": self.ok,
        }


def _table_to_strings(table) -> dict[str, dict[str, dict[str, str]]]:
    return {
        str(g): {src: {t: str(c) for t, c in img.items()} for src, img in tbl.items()}
        for g, tbl in table.items()
    }


def _table_diffs(block: str, got, expected) -> list[dict]:
    diffs = []
    for g in _ACTIVE:
        srcs = set(got[g]) | set(expected[g])
        for src in sorted(srcs):
            a = {t: c for t, c in got[g].get(src, {}).items() if not c.is_zero()}
            b = {t: c for t, c in expected[g].get(src, {}).items() if not c.is_zero()}
            if a != b:
                diffs.append({
                    "block": block,
                    "generator": str(g),
                    "source": src,
                    "computed": {t: str(c) for t, c in a.items()},
                    "printed": {t: str(c) for t, c in b.items()},
                })
    return diffs


def block_rep(
    name: str,
    labels: tuple[str, ...],
    degrees: tuple[Degree, ...],
    table: Table,
) -> MatrixRep:
    """Build a MatrixRep from a block action table (plus the scalar H)."""
    n = len(labels)
    pos = {lab: k for k, lab in enumerate(labels)}
    mats = {}
    for g in _ACTIVE:
        m = [[RationalFunction.zero()] * n for _ in range(n)]
        for src, img in table[g].items():
            for t, c in img.items():
                m[pos[t]][pos[src]] = c
        mats[g] = m
    mats[Generator.H] = [
        [RF_E if i == j else RationalFunction.zero() for j in range(n)] for i in range(n)
    ]
    return MatrixRep(n, degrees, mats, name)


@dataclass
class _Canonical:
    module: InducedModule
    block_names: list[str]
    labels: tuple[str, ...]
    degrees: tuple[Degree, ...]
    vectors: dict[str, list[list[RationalFunction]]]
    tables: dict[str, Table]  # keyed by block name (copies share content)
    errata: list[Erratum]
    unrepaired: list[str]
    copies_consistent: bool
    transcribed_tables: dict[str, Table]


def _base_name(block: str) -> str:
    return block[:-1] if block.endswith(("a", "b")) else block


@lru_cache(maxsize=None)
def _canonical(kind: str) -> _Canonical:
    if kind == "DE":
        module = build_DE()
        raw_blocks = {k: [list(dict_to_coords(module, v)) for v in vs]
                      for k, vs in VEC16_BLOCKS.items()}
        tables = {k: BLOCK16_TABLES[k] for k in raw_blocks}
        labels, degrees = BLOCK16_LABELS, BLOCK16_DEGREES
    elif kind == "DEl":
        module = build_DEl()
        raw_blocks = {k: [list(dict_to_coords(module, v)) for v in vs]
                      for k, vs in VEC32_BLOCKS.items()}
        tables = {k: BLOCK32_TABLES[_base_name(k)] for k in raw_blocks}
        labels, degrees = BLOCK32_LABELS, BLOCK32_DEGREES
    else:  # pragma: no cover - internal misuse
        raise ValueError(f"unknown module kind {kind!r}")

    mats = module.rep.mats
    module_labels = tuple(str(lab) for lab in module.labels)
    errata: list[Erratum] = []
    unrepaired: list[str] = []
    states: dict[str, _BlockState] = {}
    for name, vecs in raw_blocks.items():
        states[name] = _BlockState(
            name=name,
            labels=labels,
            degrees=degrees,
            vectors=[list(v) for v in vecs],
            table={g: {s: dict(i) for s, i in tbl.items()} for g, tbl in tables[name].items()},
        )
    for name in raw_blocks:
        final, errs, hard = _repair_block(states[name], mats, module_labels)
        states[name] = final
        errata.extend(errs)
        unrepaired.extend(hard)

    # Multiplicity-two copies must agree on one common table.
    copies_consistent = True
    canon_tables: dict[str, Table] = {}
    for name in raw_blocks:
        base = _base_name(name)
        tbl = states[name].table
        if base in canon_tables:
            same = all(
                {s: {t: c for t, c in img.items() if not c.is_zero()}
                 for s, img in tbl[g].items()}
                == {s: {t: c for t, c in img.items() if not c.is_zero()}
                    for s, img in canon_tables[base][g].items()}
                for g in _ACTIVE
            )
            if not same:
                copies_consistent = False
        else:
            canon_tables[base] = tbl

    return _Canonical(
        module=module,
        block_names=list(raw_blocks),
        labels=labels,
        degrees=degrees,
        vectors={n: states[n].vectors for n in raw_blocks},
        tables={n: states[n].table for n in raw_blocks},
        errata=errata,
        unrepaired=unrepaired,
        copies_consistent=copies_consistent,
        transcribed_tables=tables,
    )


def decompose(kind: str) -> DecompositionReport:
    """Verify the published block decomposition of one induced module.

    Repairs and reports misprints, proves each block is closed (M·P = P·D
    with P of full rank), regenerates the block action tables, diffs them
    against the transcription, and runs the relation suite on every block.
    """
    can = _canonical(kind)
    module = can.module
    mats = module.rep.mats
    all_vecs = [v for n in can.block_names for v in can.vectors[n]]
    spanning = rref_subspace(all_vecs, module.rep.dim).dim

    module_labels = tuple(str(lab) for lab in module.labels)

    reports = []
    for name in can.block_names:
        vecs = can.vectors[name]
        table = can.tables[name]
        state = _BlockState(name, can.labels, can.degrees, [list(v) for v in vecs], table)
        closure = not _failures(state, mats)
        # The Hamiltonian must act as the energy scalar on each block vector.
        closure = closure and all(
            vec_eq(apply_matrix(mats[Generator.H], v), vec_scale(v, RF_E)) for v in vecs
        )
        rep = block_rep(name, can.labels, can.degrees, table)
        rel_report = verify_relations(rep)
        expected = can.transcribed_tables[name]
        diffs = _table_diffs(name, table, expected)
        reports.append(BlockReport(
            block=name,
            dim=len(vecs),
            labels=can.labels,
            vectors=[coords_to_dict(module_labels, v) for v in vecs],
            action_table=_table_to_strings(table),
            closure_passed=closure,
            matches_paper=not diffs and not any(
                err.location.startswith(name) for err in can.errata
            ),
            diffs=diffs,
            relations_ok=rel_report.ok,
        ))

    return DecompositionReport(
        module=module.name,
        ambient_dim=module.rep.dim,
        spanning_rank=spanning,
        blocks=reports,
        errata=can.errata,
        copies_consistent=can.copies_consistent,
        unrepaired=can.unrepaired,
    )


def change_of_basis(
    module: InducedModule,
    blocks: list[tuple[str, tuple[str, ...], list[list[RationalFunction]]]],
) -> list[dict]:
    """Conjugate every generator into the given basis and slice block tables.

    ``blocks`` is a list of (name, coordinate labels, basis vectors in
    ambient coordinates). Returns one report per block with the regenerated
    action table and the off-block leakage entries, if any.
    """
    cols = [v for _, _, vecs in blocks for v in vecs]
    n = module.rep.dim
    if len(cols) != n:
        raise ValueError("basis must have exactly ambient-dimension many vectors")
    p = [[cols[j][i] for j in range(n)] for i in range(n)]
    p_inv = mat_inverse(p)  # raises ArithmeticError when singular

    spans: list[tuple[str, tuple[str, ...], list[int]]] = []
    off = 0
    for name, labels, vecs in blocks:
        spans.append((name, labels, list(range(off, off + len(vecs)))))
        off += len(vecs)

    out = []
    for name, labels, positions in spans:
        table: dict[str, dict[str, dict[str, str]]] = {}
        leaks: list[dict] = []
        for g in _ACTIVE:
            gt: dict[str, dict[str, str]] = {}
            for local, j in enumerate(positions):
                img = apply_matrix(module.rep.mats[g], cols[j])
                expansion = apply_matrix(p_inv, img)
                entry: dict[str, str] = {}
                for k, c in enumerate(expansion):
                    if c.is_zero():
                        continue
                    if k in positions:
                        entry[labels[positions.index(k)]] = str(c)
                    else:
                        leaks.append({
                            "generator": str(g),
                            "source": labels[local],
                            "ambient_position": k,
                            "coefficient": str(c),
                        })
                gt[labels[local]] = entry
            table[str(g)] = gt
        out.append({
            "block": name,
            "dim": len(positions),
            "action_table": table,
            "closure_passed": not leaks,
            "leaks": leaks,
        })
    return out


# -- 4-dim extraction on the lam = E^2 locus ---------------------------------

def _subst_table(table: Table, q) -> Table:
    return {
        g: {s: {t: c.subst_lam(q) for t, c in img.items()} for s, img in tbl.items()}
        for g, tbl in table.items()
    }


@lru_cache(maxsize=None)
def extract_irrep_4d(block: str, rescaled: bool = True) -> BlockReport:
    """The 4-dim irrep living inside an 8-dim block once lam is set to E².

    Builds the 8-dim block representation from the canonical table,
    substitutes lam := E², takes the published 4-dim basis (optionally with
    the diagonal rescaling applied), verifies closure, regenerates the 4-dim
    action table, and diffs it against the published one.
    """
    if block not in ("D1", "D2"):
        raise ValueError("block must be D1 or D2")
    can = _canonical("DEl")
    e_sq = BiPoly.var_E() * BiPoly.var_E()
    table8 = _subst_table(can.tables[block + "a"], e_sq)
    rep8 = block_rep(block + "-locus", BLOCK32_LABELS, BLOCK32_DEGREES, table8)

    labels4 = BLOCK16_LABELS
    degrees4 = BLOCK16_DEGREES
    vecs = []
    for k, vd in enumerate(SUB4_RAW[block]):
        coords = [RationalFunction.zero()] * 8
        for lab, c in vd.items():
            coords[BLOCK32_LABELS.index(lab)] = c
        if rescaled:
            coords = vec_scale(coords, SUB4_SCALING[block][k])
        vecs.append(coords)

    expected = SUB4_SCALED_TABLES[block] if rescaled else SUB4_RAW_TABLES[block]
    state = _BlockState(
        name=f"{block}-4d",
        labels=labels4,
        degrees=degrees4,
        vectors=[list(v) for v in vecs],
        table={g: {s: dict(i) for s, i in tbl.items()} for g, tbl in expected.items()},
    )
    errata: list[Erratum] = []
    unrepaired: list[str] = []
    if _failures(state, rep8.mats):
        state, errata, unrepaired = _repair_block(state, rep8.mats, BLOCK32_LABELS)

    closure = not _failures(state, rep8.mats) and not unrepaired
    span = rref_subspace(state.vectors, 8)
    rep4 = block_rep(f"{block}-4d", labels4, degrees4, state.table)
    rel_ok = verify_relations(rep4).ok
    diffs = _table_diffs(f"{block}-4d", state.table, expected)
    return BlockReport(
        block=f"{block}-4d" + ("-rescaled" if rescaled else "-raw"),
        dim=4,
        labels=labels4,
        vectors=[coords_to_dict(BLOCK32_LABELS, v) for v in state.vectors],
        action_table=_table_to_strings(state.table),
        closure_passed=closure and span.dim == 4,
        matches_paper=not diffs and not errata,
        diffs=diffs,
        relations_ok=rel_ok,
    )


# -- invariant-subspace probe ------------------------------------------------

@dataclass
class ProbeReport:
    block: str
    e0: str
    l0: str
    seed: tuple[str, str]
    on_locus: bool
    seed_aligned: bool
    closure_dim: int
    expected_dim: int
    witnesses: list[dict]
    witnesses_proportional: bool
    witnesses_match_paper: bool
    invariant_basis: list[list[str]] | None

    @property
    def ok(self) -> bool:
        return self.closure_dim == self.expected_dim

    def to_json(self) -> dict:
        return {
            "block": self.block,
            "E0": self.e0,
            "lam0": self.l0,
            "seed": list(self.seed),
            "on_locus": self.on_locus,
            "seed_aligned": self.seed_aligned,
            "closure_dim": self.closure_dim,
            "expected_dim": self.expected_dim,
            "witnesses": self.witnesses,
            "witnesses_proportional": self.witnesses_proportional,
            "witnesses_match_paper": self.witnesses_match_paper,
            "invariant_basis": self.invariant_basis,
            "ok": self.ok,
        }


def invariant_subspace_probe(
    block: str,
    e0: GaussianRational,
    l0: GaussianRational,
    c1: GaussianRational,
    c2: GaussianRational,
) -> ProbeReport:
    """Close the degree-(0,0) seed c1·v1 + c2·v2 inside one 8-dim block.

    Works at an exact specialization (E0, lam0). Reports the closure
    dimension (4 exactly on the lam = E0² locus with the aligned seed, 8
    otherwise), the four degree-(1,0) witness vectors with their expansion
    in the block's chi pair, and the proportionality verdict.
    """
    if block not in ("D1", "D2"):
        raise ValueError("block must be D1 or D2")
    if c1.is_zero() and c2.is_zero():
        raise ValueError("seed coefficients must not both vanish")
    if e0.is_zero() or l0.is_zero():
        raise ValueError(
            "probe requires E0 != 0 and lam0 != 0 (basis scalings divide by both)"
        )
    can = _canonical("DEl")
    table = can.tables[block + "a"]
    rep = block_rep(block, BLOCK32_LABELS, BLOCK32_DEGREES, table)
    mats = {g: specialize_matrix(m, e0, l0) for g, m in rep.mats.items()}

    zero = GaussianRational.zero()
    seed = [zero] * 8
    seed[0], seed[1] = c1, c2

    space = submodule_closure(mats, [seed], 8)

    wit_vecs = {
        "Q10 w": apply_matrix(mats[Generator.Q10], seed),
        "Q10d w": apply_matrix(mats[Generator.Q10d], seed),
        "Q01 Z w": apply_matrix(mats[Generator.Q01], apply_matrix(mats[Generator.Z], seed)),
        "Q01d Z w": apply_matrix(mats[Generator.Q01d], apply_matrix(mats[Generator.Z], seed)),
    }
    chi_slots = (BLOCK32_LABELS.index("chi1"), BLOCK32_LABELS.index("chi2"))
    published = PROBE_WITNESSES[block]
    witnesses = []
    match_paper = True
    rows = []
    for name, w in wit_vecs.items():
        in_chi = all(x.is_zero() for k, x in enumerate(w) if k not in chi_slots)
        got = (w[chi_slots[0]], w[chi_slots[1]])
        pub = published[name]
        want = []
        for lab in ("chi1", "chi2"):
            a, b = pub.get(lab, (RationalFunction.zero(), RationalFunction.zero()))
            want.append(a.specialize(e0, l0) * c1 + b.specialize(e0, l0) * c2)
        ok = in_chi and (got[0] - want[0]).is_zero() and (got[1] - want[1]).is_zero()
        match_paper = match_paper and ok
        witnesses.append({
            "name": name,
            "chi1": str(got[0]),
            "chi2": str(got[1]),
            "in_chi_component": in_chi,
            "matches_paper": ok,
        })
        rows.append([got[0], got[1]])
    proportional = rref_subspace(rows, 2).dim <= 1

    on_locus = (l0 - e0 * e0).is_zero()
    aligned_c1, aligned_c2 = PROBE_SEEDS[block]
    # alignment means the seed is a nonzero multiple of the published one
    aligned = rref_subspace(
        [[c1, c2], [aligned_c1.specialize(e0, l0), aligned_c2.specialize(e0, l0)]], 2
    ).dim <= 1
    expected = 4 if (on_locus and aligned) else 8

    return ProbeReport(
        block=block,
        e0=str(e0),
        l0=str(l0),
        seed=(str(c1), str(c2)),
        on_locus=on_locus,
        seed_aligned=aligned,
        closure_dim=space.dim,
        expected_dim=expected,
        witnesses=witnesses,
        witnesses_proportional=proportional,
        witnesses_match_paper=match_paper,
        invariant_basis=(
            [[str(c) for c in row] for row in space.basis] if space.dim == 4 else None
        ),
    )


# -- intertwiners ------------------------------------------------------------

def intertwiner_dim(
    rep_a: MatrixRep,
    rep_b: MatrixRep,
    e0: GaussianRational,
    l0: GaussianRational,
) -> int:
    """Dimension of the space of degree-preserving maps T with T·Xg = X'g·T.

    Computed at an exact specialization; 0 certifies inequivalence, and for
    irreducible representations any nonzero dimension certifies equivalence.
    """
    if rep_a.dim != rep_b.dim:
        raise ValueError("intertwiner probe expects equal dimensions")
    mats_a = {g: specialize_matrix(m, e0, l0) for g, m in rep_a.mats.items()}
    mats_b = {g: specialize_matrix(m, e0, l0) for g, m in rep_b.mats.items()}
    na, nb = rep_a.dim, rep_b.dim

    unknowns = [
        (r, c)
        for r in range(nb)
        for c in range(na)
        if rep_b.basis_degrees[r] == rep_a.basis_degrees[c]
    ]
    index = {rc: k for k, rc in enumerate(unknowns)}
    zero = GaussianRational.zero()

    rows = []
    for g in (Generator.H,) + _ACTIVE:
        a, b = mats_a[g], mats_b[g]
        for r in range(nb):
            for c in range(na):
                row = [zero] * len(unknowns)
                touched = False
                for k in range(na):
                    if (r, k) in index and not a[k][c].is_zero():
                        row[index[(r, k)]] = row[index[(r, k)]] + a[k][c]
                        touched = True
                for k in range(nb):
                    if (k, c) in index and not b[r][k].is_zero():
                        row[index[(k, c)]] = row[index[(k, c)]] - b[r][k]
                        touched = True
                if touched:
                    rows.append(row)
    if not rows:
        return len(unknowns)
    red, _p = rref(rows)
    return len(unknowns) - len(red)


def named_block_rep(selector: str) -> MatrixRep:
    """Resolve a block representation by CLI-style name.

    ``D1``/``D2`` are the 8-dim blocks of the 32-dim module; ``DE-D1`` ..
    ``DE-D4`` are the 4-dim blocks of the 16-dim module.
    """
    if selector in ("D1", "D2"):
        can = _canonical("DEl")
        return block_rep(selector, BLOCK32_LABELS, BLOCK32_DEGREES, can.tables[selector + "a"])
    if selector.startswith("DE-"):
        name = selector[3:]
        can = _canonical("DE")
        if name in can.tables:
            return block_rep(selector, BLOCK16_LABELS, BLOCK16_DEGREES, can.tables[name])
    raise ValueError(f"unknown block selector {selector!r}")
