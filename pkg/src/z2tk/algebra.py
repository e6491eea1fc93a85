"""Generators, defining relations, and the relation verifier.

The algebra has six generators: the Hamiltonian H (degree (0,0)), the square
root Z of the Casimir sector (degree (1,1)), and two conjugate pairs of
supercharges Q10/Q10d (degree (1,0)) and Q01/Q01d (degree (0,1)). The "d"
suffix marks the adjoint partner.

The bracket of two homogeneous elements is a commutator when the degree
scalar product is even and an anticommutator when odd; this is derived from
degrees via :func:`z2tk.grading.swap_sign`, never stored per relation.

:func:`relation_list` enumerates the 21 defining relations in a fixed
canonical order; :func:`verify_relations` checks them all against a concrete
matrix representation, entry by entry, after a grading-pattern check.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping, Sequence

from .grading import DEG_00, DEG_01, DEG_10, DEG_11, Degree, swap_sign
from .linalg import Matrix, identity, mat_mul, mat_scale, mat_sub, nonzero_entries
from .scalars import RF_I, RF_ONE, RationalFunction

__all__ = [
    "Generator",
    "Relation",
    "relation_list",
    "MatrixRep",
    "general_bracket",
    "RelationResult",
    "VerificationReport",
    "verify_relations",
    "casimir_matrix",
]


class Generator(Enum):
    H = "H"
    Z = "Z"
    Q10 = "Q10"
    Q10d = "Q10d"
    Q01 = "Q01"
    Q01d = "Q01d"

    @property
    def degree(self) -> Degree:
        return _GEN_DEGREE[self]

    def __str__(self) -> str:
        return self.value


_GEN_DEGREE = {
    Generator.H: DEG_00,
    Generator.Z: DEG_11,
    Generator.Q10: DEG_10,
    Generator.Q10d: DEG_10,
    Generator.Q01: DEG_01,
    Generator.Q01d: DEG_01,
}


@dataclass(frozen=True)
class Relation:
    """bracket(left, right) == sum of rhs coefficients times generators."""

    left: Generator
    right: Generator
    rhs: tuple[tuple[Generator, RationalFunction], ...] = ()

    @property
    def is_anti(self) -> bool:
        return self.left.degree.dot(self.right.degree) == 1

    @property
    def name(self) -> str:
        op = "{%s,%s}" if self.is_anti else "[%s,%s]"
        head = op % (self.left.value, self.right.value)
        if not self.rhs:
            return head + "=0"
        bits = []
        for g, c in self.rhs:
            cs = str(c)
            bits.append(g.value if cs == "1" else f"{cs}*{g.value}")
        return head + "=" + "+".join(bits)


def relation_list() -> list[Relation]:
    """The 21 defining relations, in canonical order.

    4 supercharge squares, 4 Z anticommutators, 2 Hamiltonian-producing
    pairs, 2 mixed pairs producing i*Z, 2 vanishing mixed pairs, 6 stating
    centrality of H (including [H,H]), and [Z,Z]. Total 21.
    """
    G = Generator
    rels = [
        Relation(G.Q10, G.Q10),
        Relation(G.Q10d, G.Q10d),
        Relation(G.Q01, G.Q01),
        Relation(G.Q01d, G.Q01d),
        Relation(G.Z, G.Q10),
        Relation(G.Z, G.Q10d),
        Relation(G.Z, G.Q01),
        Relation(G.Z, G.Q01d),
        Relation(G.Q10, G.Q10d, ((G.H, RF_ONE),)),
        Relation(G.Q01, G.Q01d, ((G.H, RF_ONE),)),
        Relation(G.Q01, G.Q10d, ((G.Z, RF_I),)),
        Relation(G.Q01d, G.Q10, ((G.Z, RF_I),)),
        Relation(G.Q10, G.Q01),
        Relation(G.Q10d, G.Q01d),
        Relation(G.H, G.Z),
        Relation(G.H, G.Q10),
        Relation(G.H, G.Q10d),
        Relation(G.H, G.Q01),
        Relation(G.H, G.Q01d),
        Relation(G.H, G.H),
        Relation(G.Z, G.Z),
    ]
    assert len(rels) == 21
    return rels


@dataclass
class MatrixRep:
    """A concrete representation: one matrix per generator on a graded basis.

    ``basis_degrees[k]`` is the degree of the k-th basis vector; matrices act
    on coordinate columns, so column j of ``mats[g]`` lists the image of
    basis vector j.
    """

    dim: int
    basis_degrees: tuple[Degree, ...]
    mats: dict[Generator, Matrix]
    name: str = ""

    def grading_violations(self) -> list[tuple[str, int, int]]:
        """Entries (generator, row, col) breaking deg(row) = deg(col) + deg(g)."""
        bad = []
        for g, m in self.mats.items():
            gdeg = g.degree
            for r in range(self.dim):
                for c in range(self.dim):
                    if not m[r][c].is_zero():
                        if self.basis_degrees[r] != self.basis_degrees[c] + gdeg:
                            bad.append((g.value, r, c))
        return bad


def general_bracket(rep: Mapping[Generator, Matrix], g1: Generator, g2: Generator) -> Matrix:
    """[g1, g2] or {g1, g2} on the representation, picked by the degree rule."""
    m1, m2 = rep[g1], rep[g2]
    a = mat_mul(m1, m2)
    b = mat_mul(m2, m1)
    if swap_sign(g1.degree, g2.degree) == -1:
        return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]
    return mat_sub(a, b)


@dataclass
class RelationResult:
    relation: Relation
    passed: bool
    residual_nonzero: list[tuple[int, int, RationalFunction]]


@dataclass
class VerificationReport:
    rep_name: str
    grading_violations: list[tuple[str, int, int]]
    results: list[RelationResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.grading_violations and all(r.passed for r in self.results)


def verify_relations(rep: MatrixRep) -> VerificationReport:
    """Check the grading pattern, then all 21 relations, reporting residuals."""
    report = VerificationReport(rep.name, rep.grading_violations())
    if report.grading_violations:
        return report
    for rel in relation_list():
        lhs = general_bracket(rep.mats, rel.left, rel.right)
        resid = lhs
        for g, coeff in rel.rhs:
            resid = mat_sub(resid, mat_scale(rep.mats[g], coeff))
        nz = nonzero_entries(resid)
        report.results.append(RelationResult(rel, not nz, nz))
    return report


def casimir_matrix(rep: MatrixRep) -> Matrix:
    """Z squared; on the full induced module this is lam times the identity."""
    return mat_mul(rep.mats[Generator.Z], rep.mats[Generator.Z])
