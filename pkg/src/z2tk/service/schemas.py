"""Request and response models for the verification service.

The response shapes mirror the report dataclasses of the core package;
scalar entries are either canonical strings or the exact JSON form
{num: [[degE, degLam, quad]], den: [...]}, so every payload round-trips
without loss.
"""
from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field


class HealthResponse(BaseModel):
    status: str
    version: str


# -- verify-relations ----------------------------------------------------------

class VerifyRelationsRequest(BaseModel):
    rep: str = "DEl"


class RelationEntry(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    relation: str
    passed: bool = Field(alias="pass")
    residual_nonzero_entries: list


class VerifyRelationsResponse(BaseModel):
    rep: str
    dim: int
    ok: bool
    grading_violations: list
    zero_generators: list[str]
    relations: list[RelationEntry]


# -- decompose -------------------------------------------------------------------

class DecomposeRequest(BaseModel):
    rep: str = "DE"
    lambda_eq_e2: bool = False


class ErratumEntry(BaseModel):
    location: str
    kind: str
    printed: str
    corrected: str
    derivation: str


class BlockEntry(BaseModel):
    block: str
    dim: int
    labels: list[str]
    vectors: list[dict[str, str]]
    action_table: dict[str, dict[str, dict[str, str]]]
    closure_passed: bool
    matches_paper: bool
    diffs: list[dict]
    relations_ok: bool


class DecomposeResponse(BaseModel):
    module: str
    ambient_dim: int
    spanning_rank: int
    blocks: list[BlockEntry]
    errata: list[ErratumEntry]
    copies_consistent: bool
    unrepaired: list[str]
    ok: bool
    extracted_4d: list[BlockEntry] | None = None


# -- probe -----------------------------------------------------------------------

class ProbeRequest(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    block: str | None = None
    e0: str | None = Field(default=None, alias="E")
    lam0: str | None = Field(default=None, alias="lambda")
    seed: str | None = None
    panel: str | None = None


class ProbeEntry(BaseModel):
    block: str
    E0: str
    lam0: str
    seed: list[str]
    on_locus: bool
    seed_aligned: bool
    closure_dim: int
    expected_dim: int
    witnesses: list[dict]
    witnesses_proportional: bool
    witnesses_match_paper: bool
    invariant_basis: list[list[str]] | None
    ok: bool


class ProbeResponse(BaseModel):
    results: list[ProbeEntry]
    skipped: list[str]
    ok: bool


# -- intertwine ------------------------------------------------------------------

class IntertwineRequest(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    rep_a: str = "D1"
    rep_b: str = "D2"
    e0: str | None = Field(default=None, alias="E")
    lam0: str | None = Field(default=None, alias="lambda")
    panel: str | None = None


class IntertwineEntry(BaseModel):
    rep_a: str
    rep_b: str
    E0: str
    lam0: str
    dim: int


class IntertwineResponse(BaseModel):
    results: list[IntertwineEntry]
    skipped: list[str]


# -- mechanics -------------------------------------------------------------------

class MechanicsRequest(BaseModel):
    lagrangian: str | None = None
    g: str | None = None
    on_shell: bool = False


class ChargeEntry(BaseModel):
    generator: str
    expr: str
    degree_ok: bool
    conserved: bool
    matches_paper: bool | None
    constant: str | None
    used_eom: bool


class MechanicsResponse(BaseModel):
    lagrangian: str
    frame: str
    variables: list[str]
    expr: str
    substitutions: list[str]
    real_up_to_total_derivative: bool
    invariance: dict[str, dict]
    el_equations: dict[str, str]
    charges: list[ChargeEntry]
    display_match: bool | None
    higher_derivative_identity: bool | None
    on_shell_charges: dict[str, str] | None
    ok: bool


# -- dump ------------------------------------------------------------------------

class DumpRequest(BaseModel):
    rep: str = "DE"


class DumpResponse(BaseModel):
    rep: str
    dim: int
    basis_degrees: list[list[int]]
    mats: dict[str, list[list[dict]]]


# -- all -------------------------------------------------------------------------

class CriterionEntry(BaseModel):
    number: int
    title: str
    passed: bool
    details: list[str]


class AllResponse(BaseModel):
    criteria: list[CriterionEntry]
    ok: bool
