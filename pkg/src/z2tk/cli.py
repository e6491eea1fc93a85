"""Command-line front end.

Every verb is a thin client of the HTTP service: the command is translated
into one request, sent either to an in-process app instance (the default)
or to a running server (``--server``), and the JSON reply is rendered as
text or emitted verbatim.

Exit codes: 0 on success, 2 when a verification contract fails (a relation,
a closure, an invariance check), 64 on bad arguments or any other rejected
request. Exact literals follow the form ``a/b+c/d*i``; no floating point is
accepted anywhere.
"""
from __future__ import annotations

import argparse
import json
import sys


class _Parser(argparse.ArgumentParser):
    """argparse with the usage-error exit code fixed at 64."""

    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(64)


def _add_common(parser: argparse.ArgumentParser, top: bool) -> None:
    """The shared flags, accepted both before and after the verb."""
    parser.add_argument(
        "--server",
        default=None if top else argparse.SUPPRESS,
        help="base URL of a running service (default: in-process)",
    )
    parser.add_argument(
        "--format",
        choices=("json", "text"),
        default="text" if top else argparse.SUPPRESS,
    )
    parser.add_argument(
        "--output",
        default=None if top else argparse.SUPPRESS,
        help="write the report to this file instead of stdout",
    )


def _build_parser() -> _Parser:
    parser = _Parser(prog="z2tk", description=__doc__.splitlines()[0])
    _add_common(parser, top=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-relations", help="check all 21 defining relations on a representation")
    _add_common(p, top=False)
    p.add_argument("--rep", default="DEl", help="DEl, DE, or a block name (default: DEl)")

    p = sub.add_parser("decompose", help="split an induced module into its closed blocks")
    _add_common(p, top=False)
    p.add_argument("--rep", default="DE", choices=("DE", "DEl"))
    p.add_argument("--lambda-eq-E2", dest="lambda_eq_e2", action="store_true",
                   help="additionally extract the two 4-dim irreps on the locus")

    p = sub.add_parser("probe", help="measure the closure dimension of a seeded subspace")
    _add_common(p, top=False)
    p.add_argument("--block", choices=("D1", "D2"), help="default: both blocks")
    p.add_argument("--E", dest="e0", help="exact value of E (single-point mode)")
    p.add_argument("--lambda", dest="lam0", help="exact value of lambda (single-point mode)")
    p.add_argument("--seed", help="seed coefficients c1,c2 (default: the aligned seed)")
    p.add_argument("--panel", help="specialization panel E,lam;E,lam;... (default panel otherwise)")

    p = sub.add_parser("intertwine", help="dimension of the space of intertwiners between two blocks")
    _add_common(p, top=False)
    p.add_argument("--rep-a", default="D1")
    p.add_argument("--rep-b", default="D2")
    p.add_argument("--E", dest="e0")
    p.add_argument("--lambda", dest="lam0")
    p.add_argument("--panel", help="specialization panel (default: the off-locus panel points)")

    p = sub.add_parser("mechanics", help="invariance, field equations and conserved charges")
    _add_common(p, top=False)
    p.add_argument("--L", dest="lagrangian", help="catalogue name (L0..L4, Lg)")
    p.add_argument("--action1", action="store_true",
                   help="compose the higher-derivative action from a generating function")
    p.add_argument("--g", help="generating function for --action1, e.g. \"mu*x*xbar\"")
    p.add_argument("--on-shell", dest="on_shell", action="store_true",
                   help="also reduce the charges by the auxiliary equations of motion")

    p = sub.add_parser("dump", help="emit the full matrices of a representation")
    _add_common(p, top=False)
    p.add_argument("--rep", default="DE", help="DEl, DE, or a block name")

    p = sub.add_parser("all", help="run the complete acceptance suite")
    _add_common(p, top=False)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


# -- request building ------------------------------------------------------------

def _request_for(args) -> tuple[str, dict]:
    if args.command == "verify-relations":
        return "/verify-relations", {"rep": args.rep}
    if args.command == "decompose":
        return "/decompose", {"rep": args.rep, "lambda_eq_e2": args.lambda_eq_e2}
    if args.command == "probe":
        body = {}
        if args.block:
            body["block"] = args.block
        if args.e0 is not None:
            body["E"] = args.e0
        if args.lam0 is not None:
            body["lambda"] = args.lam0
        if args.seed:
            body["seed"] = args.seed
        if args.panel:
            body["panel"] = args.panel
        return "/probe", body
    if args.command == "intertwine":
        body = {"rep_a": args.rep_a, "rep_b": args.rep_b}
        if args.e0 is not None:
            body["E"] = args.e0
        if args.lam0 is not None:
            body["lambda"] = args.lam0
        if args.panel:
            body["panel"] = args.panel
        return "/intertwine", body
    if args.command == "mechanics":
        body = {"on_shell": args.on_shell}
        if args.lagrangian is not None:
            body["lagrangian"] = args.lagrangian
        if args.action1 or args.g is not None:
            body["g"] = args.g
        return "/mechanics", body
    if args.command == "dump":
        return "/dump", {"rep": args.rep}
    return "/all", {}


# -- text rendering ----------------------------------------------------------------

def _mark(flag: bool) -> str:
    return "PASS" if flag else "FAIL"


def _render_verify(p: dict) -> str:
    lines = [f"{p['rep']} (dim {p['dim']}): {_mark(p['ok'])}"]
    for r in p["relations"]:
        lines.append(f"  {_mark(r['pass'])}  {r['relation']}")
    if p["grading_violations"]:
        lines.append(f"  grading violations: {p['grading_violations']}")
    if p["zero_generators"]:
        lines.append("  generators represented by the zero matrix: "
                     + ", ".join(p["zero_generators"]))
    return "\n".join(lines)


def _render_block(b: dict, indent: str = "  ") -> str:
    line = (f"{indent}{b['block']}: dim {b['dim']}, closure {_mark(b['closure_passed'])}, "
            f"relations {_mark(b['relations_ok'])}, table match {b['matches_paper']}")
    if b["diffs"]:
        line += f" ({len(b['diffs'])} diffs)"
    return line


def _render_decompose(p: dict) -> str:
    lines = [
        f"{p['module']}: spanning rank {p['spanning_rank']}/{p['ambient_dim']}, "
        f"copies consistent {p['copies_consistent']}, overall {_mark(p['ok'])}"
    ]
    lines += [_render_block(b) for b in p["blocks"]]
    for e in p["errata"]:
        lines.append(f"  erratum ({e['kind']}) at {e['location']}:")
        lines.append(f"    printed:   {e['printed']}")
        lines.append(f"    corrected: {e['corrected']}")
    for u in p["unrepaired"]:
        lines.append(f"  unrepaired: {u}")
    if p.get("extracted_4d"):
        lines.append("  on the lambda = E^2 locus:")
        lines += [_render_block(b, "    ") for b in p["extracted_4d"]]
    return "\n".join(lines)


def _render_probe(p: dict) -> str:
    lines = []
    for r in p["results"]:
        lines.append(
            f"{r['block']} at (E,lam)=({r['E0']},{r['lam0']}) seed ({r['seed'][0]},{r['seed'][1]}): "
            f"closure dim {r['closure_dim']} (expected {r['expected_dim']}) {_mark(r['ok'])}"
        )
    for s in p["skipped"]:
        lines.append(f"skipped: {s}")
    lines.append(f"overall: {_mark(p['ok'])}")
    return "\n".join(lines)


def _render_intertwine(p: dict) -> str:
    lines = [
        f"{r['rep_a']} ~ {r['rep_b']} at (E,lam)=({r['E0']},{r['lam0']}): "
        f"intertwiner dimension {r['dim']}"
        for r in p["results"]
    ]
    lines += [f"skipped: {s}" for s in p["skipped"]]
    return "\n".join(lines)


def _render_mechanics(p: dict) -> str:
    lines = [f"{p['lagrangian']} over frame {p['frame']} "
             f"(variables {', '.join(p['variables'])}): {_mark(p['ok'])}"]
    lines.append(f"  L = {p['expr']}")
    for s in p["substitutions"]:
        lines.append(f"  with {s}")
    lines.append(f"  real up to a total derivative: {p['real_up_to_total_derivative']}")
    for delta, info in p["invariance"].items():
        verdict = "total derivative" if info["total_derivative"] else "NOT a total derivative"
        lines.append(f"  {delta}: {verdict}")
        if info["witness"]:
            lines.append(f"    boundary term {info['witness']}")
    lines.append("  field equations:")
    for var, eq in p["el_equations"].items():
        lines.append(f"    {var}: {eq} = 0")
    if p["charges"]:
        lines.append("  charges:")
        for c in p["charges"]:
            extra = f", matches published table (constant {c['constant']})" if c["matches_paper"] else ""
            if c["matches_paper"] and c["used_eom"]:
                extra += " after auxiliary equations of motion"
            lines.append(
                f"    {c['generator']}: {c['expr']}  "
                f"[conserved {c['conserved']}, degree ok {c['degree_ok']}{extra}]"
            )
    if p.get("on_shell_charges") is not None:
        lines.append("  charges with auxiliaries eliminated:")
        for gen, expr in p["on_shell_charges"].items():
            lines.append(f"    {gen}: {expr}")
    if p["display_match"] is not None:
        lines.append(f"  matches the published closed form modulo a total derivative: {p['display_match']}")
    if p["higher_derivative_identity"] is not None:
        lines.append(f"  supercharge image of the composed action is an exact derivative: {p['higher_derivative_identity']}")
    return "\n".join(lines)


def _render_dump(p: dict) -> str:
    lines = [f"{p['rep']} (dim {p['dim']})"]
    lines.append("  basis degrees: " + " ".join(f"({a},{b})" for a, b in p["basis_degrees"]))
    for gen in sorted(p["mats"]):
        lines.append(f"  {gen}:")
        for row in p["mats"][gen]:
            rendered = [_rf_text(c) for c in row]
            lines.append("    [" + ", ".join(rendered) + "]")
    return "\n".join(lines)


def _rf_text(rf_json: dict) -> str:
    def poly(rows):
        parts = []
        for deg_e, deg_l, quad in rows:
            re_n, re_d, im_n, im_d = quad
            coeff = []
            if re_n:
                coeff.append(f"{re_n}" if re_d == 1 else f"{re_n}/{re_d}")
            if im_n:
                coeff.append((f"{im_n}" if im_d == 1 else f"{im_n}/{im_d}") + "*i")
            body = "+".join(coeff) or "0"
            mono = "".join(
                f"*{v}^{d}" if d > 1 else (f"*{v}" if d == 1 else "")
                for v, d in (("E", deg_e), ("lam", deg_l))
            )
            if mono and body == "1":
                parts.append(mono[1:])
            elif mono:
                parts.append(f"({body}){mono}")
            else:
                parts.append(body)
        return "+".join(parts) or "0"

    num, den = poly(rf_json["num"]), poly(rf_json["den"])
    return num if den == "(1)" else f"[{num}]/[{den}]"


def _render_all(p: dict) -> str:
    lines = []
    for c in p["criteria"]:
        lines.append(f"criterion {c['number']}: {_mark(c['passed'])} - {c['title']}")
        for d in c["details"]:
            lines.append(f"    {d}")
    lines.append(f"overall: {_mark(p['ok'])}")
    return "\n".join(lines)


_RENDERERS = {
    "verify-relations": _render_verify,
    "decompose": _render_decompose,
    "probe": _render_probe,
    "intertwine": _render_intertwine,
    "mechanics": _render_mechanics,
    "dump": _render_dump,
    "all": _render_all,
}

_ALWAYS_ZERO = ("intertwine", "dump")


def _exit_code(command: str, payload: dict) -> int:
    if command in _ALWAYS_ZERO:
        return 0
    return 0 if payload.get("ok", True) else 2


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)

    if args.command == "serve":
        import uvicorn

        from .service.app import app

        uvicorn.run(app, host=args.host, port=args.port)
        return 0

    path, body = _request_for(args)
    if args.server:
        import httpx

        client = httpx.Client(base_url=args.server, timeout=300.0)
    else:
        import warnings

        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            from fastapi.testclient import TestClient

        from .service.app import app

        client = TestClient(app)
    try:
        resp = client.post(path, json=body)
    finally:
        client.close()

    if resp.status_code >= 400:
        try:
            detail = resp.json().get("detail", resp.text)
        except ValueError:
            detail = resp.text
        sys.stderr.write(f"z2tk {args.command}: {detail}\n")
        return 64

    payload = resp.json()
    if args.format == "json":
        _emit(json.dumps(payload, indent=2, sort_keys=True), args.output)
    else:
        _emit(_RENDERERS[args.command](payload), args.output)
    return _exit_code(args.command, payload)


if __name__ == "__main__":
    sys.exit(main())
