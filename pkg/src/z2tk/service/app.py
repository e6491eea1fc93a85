"""HTTP verification service.

Every endpoint wraps one core computation and returns the exact report as
JSON. Domain errors (unknown selectors, poles, malformed exact literals,
derivative-cap overflows) surface as HTTP 400 with the original message;
nothing is ever rounded or approximated on the way out.
"""
from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..acceptance import run_all
from ..algebra import MatrixRep, verify_relations
from ..mech.gpoly import DerivativeCapError
from ..mech.lagrangians import (
    action1_report,
    build_action1,
    catalogue,
    catalogue_names,
    mechanics_report,
    on_shell_charges,
)
from ..modtools import (
    DEFAULT_PANEL,
    PROBE_SEEDS,
    decompose,
    extract_irrep_4d,
    intertwiner_dim,
    invariant_subspace_probe,
    named_block_rep,
)
from ..parsing import parse_gpoly, parse_gr, parse_panel
from ..reps import build_DE, build_DEl
from ..scalars import GaussianRational, PoleError
from .schemas import (
    AllResponse,
    DecomposeRequest,
    DecomposeResponse,
    DumpRequest,
    DumpResponse,
    HealthResponse,
    IntertwineRequest,
    IntertwineResponse,
    MechanicsRequest,
    MechanicsResponse,
    ProbeRequest,
    ProbeResponse,
    VerifyRelationsRequest,
    VerifyRelationsResponse,
)

app = FastAPI(title="z2tk verification service", version=__version__)

_DOMAIN_ERRORS = (ValueError, PoleError, DerivativeCapError)

_BLOCK_NAMES = ("D1", "D2", "DE-D1", "DE-D2", "DE-D3", "DE-D4")


def _resolve_rep(name: str) -> MatrixRep:
    if name == "DEl":
        return build_DEl().rep
    if name == "DE":
        return build_DE().rep
    return named_block_rep(name)


def _bad_request(exc: Exception) -> HTTPException:
    return HTTPException(status_code=400, detail=str(exc))


@app.get("/health", response_model=HealthResponse)
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/verify-relations", response_model=VerifyRelationsResponse)
def verify_relations_endpoint(req: VerifyRelationsRequest) -> dict:
    try:
        rep = _resolve_rep(req.rep)
    except _DOMAIN_ERRORS as exc:
        raise _bad_request(exc)
    report = verify_relations(rep)
    zero = sorted(
        g.value
        for g, mat in rep.mats.items()
        if all(c.is_zero() for row in mat for c in row)
    )
    return {
        "rep": req.rep,
        "dim": rep.dim,
        "ok": report.ok,
        "grading_violations": [list(v) for v in report.grading_violations],
        "zero_generators": zero,
        "relations": [
            {
                "relation": r.relation.name,
                "pass": r.passed,
                "residual_nonzero_entries": [
                    [row, col, value.to_json()] for row, col, value in r.residual_nonzero
                ],
            }
            for r in report.results
        ],
    }


@app.post("/decompose", response_model=DecomposeResponse)
def decompose_endpoint(req: DecomposeRequest) -> dict:
    if req.rep not in ("DE", "DEl"):
        raise _bad_request(ValueError(f"decompose expects rep DE or DEl, got {req.rep!r}"))
    if req.lambda_eq_e2 and req.rep != "DEl":
        raise _bad_request(
            ValueError("the locus extraction applies to the 32-dim module only")
        )
    report = decompose(req.rep)
    payload = report.to_json()
    payload["extracted_4d"] = (
        [extract_irrep_4d(b).to_json() for b in ("D1", "D2")] if req.lambda_eq_e2 else None
    )
    return payload


def _parse_seed(text: str) -> tuple[GaussianRational, GaussianRational]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"seed {text!r} is not of the form c1,c2")
    return parse_gr(parts[0]), parse_gr(parts[1])


@app.post("/probe", response_model=ProbeResponse)
def probe_endpoint(req: ProbeRequest) -> dict:
    try:
        blocks = (req.block,) if req.block else ("D1", "D2")
        for b in blocks:
            if b not in PROBE_SEEDS:
                raise ValueError(f"unknown block {b!r}")
        single_point = req.e0 is not None or req.lam0 is not None
        if single_point:
            if req.e0 is None or req.lam0 is None:
                raise ValueError("a single-point probe needs both E and lambda")
            if req.panel:
                raise ValueError("give either a single point or a panel, not both")
            points = [(parse_gr(req.e0), parse_gr(req.lam0))]
        else:
            points = (
                parse_panel(req.panel)
                if req.panel
                else [
                    (GaussianRational.of(e), GaussianRational.of(l))
                    for e, l in DEFAULT_PANEL
                ]
            )
        explicit_seed = _parse_seed(req.seed) if req.seed else None
    except _DOMAIN_ERRORS as exc:
        raise _bad_request(exc)

    results = []
    skipped = []
    for block in blocks:
        for e0, l0 in points:
            if explicit_seed is not None:
                c1, c2 = explicit_seed
            else:
                c1_rf, c2_rf = PROBE_SEEDS[block]
                c1, c2 = c1_rf.specialize(e0, l0), c2_rf.specialize(e0, l0)
            try:
                report = invariant_subspace_probe(block, e0, l0, c1, c2)
            except _DOMAIN_ERRORS as exc:
                if single_point:
                    raise _bad_request(exc)
                skipped.append(f"{block} at (E,lam)=({e0},{l0}): {exc}")
                continue
            results.append(report.to_json())
    return {
        "results": results,
        "skipped": skipped,
        "ok": bool(results) and all(r["ok"] for r in results),
    }


@app.post("/intertwine", response_model=IntertwineResponse)
def intertwine_endpoint(req: IntertwineRequest) -> dict:
    try:
        for name in (req.rep_a, req.rep_b):
            if name not in _BLOCK_NAMES:
                raise ValueError(
                    f"unknown block {name!r}; intertwiners are computed "
                    f"between block representations {', '.join(_BLOCK_NAMES)}"
                )
        rep_a, rep_b = named_block_rep(req.rep_a), named_block_rep(req.rep_b)
        single_point = req.e0 is not None or req.lam0 is not None
        if single_point:
            if req.e0 is None or req.lam0 is None:
                raise ValueError("a single-point computation needs both E and lambda")
            points = [(parse_gr(req.e0), parse_gr(req.lam0))]
        elif req.panel:
            points = parse_panel(req.panel)
        else:
            points = [
                (GaussianRational.of(e), GaussianRational.of(l))
                for e, l in DEFAULT_PANEL
                if l != e * e
            ]
    except _DOMAIN_ERRORS as exc:
        raise _bad_request(exc)

    results = []
    skipped = []
    for e0, l0 in points:
        try:
            dim = intertwiner_dim(rep_a, rep_b, e0, l0)
        except _DOMAIN_ERRORS as exc:
            if single_point:
                raise _bad_request(exc)
            skipped.append(f"(E,lam)=({e0},{l0}): {exc}")
            continue
        results.append(
            {
                "rep_a": req.rep_a,
                "rep_b": req.rep_b,
                "E0": str(e0),
                "lam0": str(l0),
                "dim": dim,
            }
        )
    return {"results": results, "skipped": skipped}


@app.post("/mechanics", response_model=MechanicsResponse)
def mechanics_endpoint(req: MechanicsRequest) -> dict:
    if (req.lagrangian is None) == (req.g is None):
        raise _bad_request(
            ValueError("give exactly one of: a catalogue name, or a generating function g")
        )
    try:
        if req.lagrangian is not None:
            if req.lagrangian not in catalogue_names():
                raise ValueError(
                    f"unknown Lagrangian {req.lagrangian!r}; "
                    f"catalogue: {', '.join(catalogue_names())}"
                )
            L = catalogue(req.lagrangian)
            report = mechanics_report(req.lagrangian)
        else:
            g = parse_gpoly(req.g)
            L = build_action1(g)
            report = action1_report(g)
        payload = report.to_json()
        payload["on_shell_charges"] = on_shell_charges(L) if req.on_shell else None
    except _DOMAIN_ERRORS as exc:
        raise _bad_request(exc)
    return payload


@app.post("/dump", response_model=DumpResponse)
def dump_endpoint(req: DumpRequest) -> dict:
    try:
        rep = _resolve_rep(req.rep)
    except _DOMAIN_ERRORS as exc:
        raise _bad_request(exc)
    return {
        "rep": req.rep,
        "dim": rep.dim,
        "basis_degrees": [[d.a, d.b] for d in rep.basis_degrees],
        "mats": {
            g.value: [[c.to_json() for c in row] for row in mat]
            for g, mat in rep.mats.items()
        },
    }


@app.post("/all", response_model=AllResponse)
def all_endpoint() -> dict:
    criteria = [r.to_json() for r in run_all()]
    return {"criteria": criteria, "ok": all(c["passed"] for c in criteria)}
