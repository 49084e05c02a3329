"""Command line interface.

Exit status: 0 on success, 1 on I/O, parse or axiom errors, 2 when a
mathematical precondition fails (for instance ``diamond`` on a
non-nilpotent algebra).  Randomized steps depend only on ``--seed``.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import fileformat
from .catalog import from_spec
from .classify import Kind, classify, verify_witness
from .env import EnvelopingAlgebra, extract_supercentral, is_supercentral, supercentralizing_chain
from .errors import AxiomViolationError, FormatError, PreconditionError
from .exactmath import format_rational
from .factors import clifford_center, clifford_parse, stafford_alpha, weyl_parse
from .indexcalc import compute_index, has_diamond
from .liealg import (
    Subspace,
    center,
    derived_subalgebra,
    even_part,
    is_nilpotent,
    lower_central_series,
    refined_adapted_basis,
    strip_abelian_factor,
    validate,
)

SCHEMA_VERSION = 1


def _q(x) -> str:
    return format_rational(x)


def _vec(v) -> list:
    return [_q(c) for c in v]


def _basis(S: Subspace) -> list:
    return [_vec(v) for v in S.basis]


def _matrix(M) -> list:
    return [_vec(row) for row in M]


# -- algebra-based commands ---------------------------------------------------


def cmd_validate(g, args) -> dict:
    v = validate(g)
    if v is None:
        return {"verdict": "ok", "valid": True}
    return {
        "verdict": "invalid",
        "valid": False,
        "violation": {
            "kind": v.kind,
            "indices": list(v.indices),
            "residual": _vec(v.residual) if v.residual is not None else None,
        },
    }


def cmd_series(g, args) -> dict:
    series = lower_central_series(g)
    ok, cls = is_nilpotent(g)
    Z, D = center(g), derived_subalgebra(g)
    out = {
        "verdict": "nilpotent" if ok else "not nilpotent",
        "nilpotent": ok,
        "class": cls,
        "series_dims": [s.dim for s in series],
        "derived_dim": D.dim,
        "center_dim": Z.dim,
    }
    stripped = strip_abelian_factor(g)
    out["abelian_factor_dims"] = list(stripped.abelian_dims)
    if args.witness:
        out["series_bases"] = [_basis(s) for s in series]
        out["center_basis"] = _basis(Z)
        out["derived_basis"] = _basis(D)
        if ok:
            ab = refined_adapted_basis(g)
            out["adapted_basis"] = [_vec(v) for v in ab.vectors]
    return out


def cmd_index(g, args) -> dict:
    g0 = even_part(g)
    res = compute_index(g0, args.seed)
    out = {
        "verdict": res.index,
        "index": res.index,
        "dim_even": g0.dim,
        "generic_rank": res.rank,
        "weyl_order": res.weyl_order,
    }
    if args.witness:
        out["witness_functional"] = _vec(res.witness)
    return out


def cmd_diamond(g, args) -> dict:
    verdict = has_diamond(g, args.seed)
    g0 = even_part(g)
    ind = compute_index(g0, args.seed).index
    return {
        "verdict": "true" if verdict else "false",
        "diamond": verdict,
        "index_even": ind,
        "dim_even": g0.dim,
    }


def cmd_classify(g, args) -> dict:
    ok, _ = is_nilpotent(g)
    if not ok:
        raise PreconditionError("classification requires a nilpotent algebra")
    g0 = even_part(g)
    r = classify(g0, args.seed)
    out = {
        "verdict": str(r.kind),
        "kind": str(r.kind),
        "index": r.index,
        "dim_even": r.dim,
        "diamond": r.has_diamond,
        "abelian_dims": list(r.abelian_dims),
        "verified": verify_witness(g0, r, args.seed),
    }
    if r.kind in (Kind.H5_FACTOR, Kind.H6_FACTOR):
        out["ideal_stage"] = r.stage
    if args.witness:
        if r.ideal is not None:
            out["ideal_basis"] = _basis(r.ideal)
        if r.matrix is not None:
            out["change_of_basis"] = _matrix(r.matrix)
    return out


def _env(g) -> EnvelopingAlgebra:
    return EnvelopingAlgebra(g)


def cmd_env_mul(g, args) -> dict:
    A = _env(g)
    elems = [A.parse(e) for e in args.exprs]
    prod = elems[0]
    for e in elems[1:]:
        prod = prod * e
    return {"verdict": str(prod), "product": str(prod), "pbw_order": list(A.names)}


def cmd_env_supercentral(g, args) -> dict:
    A = _env(g)
    a = A.parse(args.expr)
    s = extract_supercentral(a)
    return {
        "verdict": str(s),
        "extracted": str(s),
        "input_supercentral": is_supercentral(a),
        "pbw_order": list(A.names),
    }


def cmd_env_chain(g, args) -> dict:
    A = _env(g)
    gens = [A.parse(e) for e in args.exprs]
    r = supercentralizing_chain(gens, args.degree)
    return {
        "verdict": "complete" if r.complete else "partial",
        "complete": r.complete,
        "degree": r.degree,
        "chain": [str(e) for e in r.elements],
        "pbw_order": list(A.names),
    }


def cmd_catalog_dump(g, args) -> dict:
    return {"verdict": "dump", "algebra": fileformat.to_dict(g)}


ALGEBRA_COMMANDS = {
    "validate": cmd_validate,
    "series": cmd_series,
    "index": cmd_index,
    "diamond": cmd_diamond,
    "classify": cmd_classify,
    "env-mul": cmd_env_mul,
    "env-supercentral": cmd_env_supercentral,
    "env-chain": cmd_env_chain,
    "catalog-dump": cmd_catalog_dump,
}


# -- algebra-free commands ----------------------------------------------------


def cmd_weyl(args) -> dict:
    n = args.order
    if args.stafford is not None:
        lambdas = [s for s in args.stafford.split(",") if s.strip()]
        a = stafford_alpha(n, lambdas)
        return {"verdict": str(a), "stafford_alpha": str(a), "terms": len(a.terms)}
    if not args.exprs:
        raise FormatError("weyl needs expressions or --stafford")
    prod = weyl_parse(n, args.exprs[0])
    for e in args.exprs[1:]:
        prod = prod * weyl_parse(n, e)
    return {"verdict": str(prod), "product": str(prod)}


def cmd_clifford(args) -> dict:
    q = args.order
    out: dict = {}
    if args.exprs:
        prod = clifford_parse(q, args.exprs[0])
        for e in args.exprs[1:]:
            prod = prod * clifford_parse(q, e)
        out = {"verdict": str(prod), "product": str(prod)}
    if args.center or not args.exprs:
        basis = clifford_center(q)
        out.setdefault("verdict", len(basis))
        out["center_dim"] = len(basis)
        out["center_basis"] = [str(b) for b in basis]
    return out


# -- plumbing -----------------------------------------------------------------


def _load(args):
    """(algebra, source label, digest) for --algebra / --catalog."""
    if args.algebra and args.catalog:
        raise FormatError("give either --algebra or --catalog, not both")
    validate_now = args.command != "validate"
    if args.algebra:
        g = fileformat.parse_algebra_file(args.algebra, validate=validate_now)
        source = str(args.algebra)
    elif args.catalog:
        g = from_spec(args.catalog)
        source = f"catalog:{args.catalog}"
    else:
        raise FormatError("an algebra is required: use --algebra <path> or --catalog <name:params>")
    return g, source, fileformat.digest(g)


def _report(args, source, digest, result, elapsed) -> dict:
    rep = {
        "schema": SCHEMA_VERSION,
        "command": args.command,
        "input": {"source": source, "digest": digest},
        "seed": args.seed,
        "result": result,
    }
    if args.timing:
        rep["timing_seconds"] = round(elapsed, 6)
    return rep


def _human(rep: dict) -> str:
    res = dict(rep["result"])
    lines = []
    if rep["command"] == "catalog-dump":
        return fileformat.dumps(fileformat.from_dict(res["algebra"], validate=False)).rstrip("\n")
    verdict = res.pop("verdict")
    lines.append(str(verdict).lower() if isinstance(verdict, bool) else str(verdict))
    for k, v in res.items():
        if isinstance(v, (list, dict)):
            v = json.dumps(v, separators=(", ", ": "))
        elif isinstance(v, bool):
            v = "true" if v else "false"
        elif v is None:
            v = "-"
        lines.append(f"{k}: {v}")
    src = rep["input"]
    if src["source"] is not None:
        tail = f" (sha256 {src['digest'][:12]})" if src["digest"] else ""
        lines.append(f"input: {src['source']}{tail}")
    if "timing_seconds" in rep:
        lines.append(f"time: {rep['timing_seconds']}s")
    return "\n".join(lines)


def _run_one(args) -> dict:
    start = time.perf_counter()
    if args.command in ALGEBRA_COMMANDS:
        g, source, digest = _load(args)
        result = ALGEBRA_COMMANDS[args.command](g, args)
    elif args.command == "weyl":
        source = digest = None
        result = cmd_weyl(args)
    else:
        source = digest = None
        result = cmd_clifford(args)
    return _report(args, source, digest, result, time.perf_counter() - start)


def _emit(args, reports, out) -> None:
    if args.json:
        payload = reports if args.batch else reports[0]
        out.write(json.dumps(payload, indent=2, sort_keys=False) + "\n")
    else:
        out.write("\n\n".join(_human(r) for r in reports) + "\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for randomized searches (default 0)")
    common.add_argument("--json", action="store_true", help="machine-readable report")
    common.add_argument("--witness", action="store_true", help="include witness matrices and bases")
    common.add_argument("--timing", action="store_true", help="include wall-clock time in the report")

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("--algebra", metavar="PATH", help="algebra file (JSON)")
    source.add_argument("--catalog", metavar="SPEC", help="catalog algebra, e.g. h5, filiform:6, h5*abelian:2")
    source.add_argument("--batch", metavar="DIR", help="run on every *.json file in DIR (sorted)")

    p = argparse.ArgumentParser(prog="liediamond", description="Nilpotent Lie superalgebras, their index and enveloping algebras.")
    sub = p.add_subparsers(dest="command", required=True)
    helps = {
        "validate": "check grading, super-antisymmetry and super-Jacobi",
        "series": "lower central series, center, derived algebra",
        "index": "index of the even part and a witness functional",
        "diamond": "decide the enveloping-algebra property via the index",
        "classify": "Abelian / AbelianCodimOne / H5Factor / H6Factor / NotAlmostMaximal",
        "catalog-dump": "print the algebra in the canonical file format",
    }
    for name, text in helps.items():
        sub.add_parser(name, parents=[common, source], help=text)
    m = sub.add_parser("env-mul", parents=[common, source], help="product of elements of U(g) in PBW form")
    m.add_argument("exprs", nargs="+")
    s = sub.add_parser("env-supercentral", parents=[common, source], help="extract a supercentral element")
    s.add_argument("expr")
    c = sub.add_parser("env-chain", parents=[common, source], help="degree-truncated supercentralizing chain")
    c.add_argument("exprs", nargs="+")
    c.add_argument("--degree", type=int, default=4, help="degree bound D (default 4)")
    w = sub.add_parser("weyl", parents=[common], help="products in the Weyl algebra A_n")
    w.add_argument("order", type=int)
    w.add_argument("exprs", nargs="*")
    w.add_argument("--stafford", metavar="L2,..,Ln", help="print Stafford's element for these coefficients")
    cl = sub.add_parser("clifford", parents=[common], help="products and center in Cliff_q")
    cl.add_argument("order", type=int)
    cl.add_argument("exprs", nargs="*")
    cl.add_argument("--center", action="store_true", help="report the center")
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "batch"):
        args.batch = None
    if not hasattr(args, "degree"):
        args.degree = None
    try:
        if args.batch:
            return _run_batch(args, out, err)
        reports = [_run_one(args)]
        _emit(args, reports, out)
        if args.command == "validate" and not reports[0]["result"]["valid"]:
            return 1
        return 0
    except PreconditionError as exc:
        err.write(f"precondition failed: {exc}\n")
        return 2
    except (OSError, FormatError, AxiomViolationError) as exc:
        err.write(f"error: {exc}\n")
        return 1


def _run_batch(args, out, err) -> int:
    """Every ``*.json`` in the directory, in sorted order; worst exit status wins."""
    if args.command not in ALGEBRA_COMMANDS:
        raise FormatError("--batch only applies to algebra commands")
    if args.catalog or args.algebra:
        raise FormatError("--batch replaces --algebra/--catalog")
    files = sorted(Path(args.batch).glob("*.json"))
    if not files:
        raise FileNotFoundError(f"no *.json files in {args.batch}")
    reports, status = [], 0
    for f in files:
        args.algebra = str(f)
        try:
            rep = _run_one(args)
            code = 1 if args.command == "validate" and not rep["result"]["valid"] else 0
        except PreconditionError as exc:
            rep, code = _error_report(args, f, f"precondition failed: {exc}", 2), 2
        except (OSError, FormatError, AxiomViolationError) as exc:
            rep, code = _error_report(args, f, str(exc), 1), 1
        reports.append(rep)
        status = max(status, code)
    args.algebra = None
    _emit(args, reports, out)
    return status


def _error_report(args, path, message: str, code: int) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "command": args.command,
        "input": {"source": str(path), "digest": None},
        "seed": args.seed,
        "result": {"verdict": "error", "error": message, "exit_status": code},
    }


if __name__ == "__main__":
    sys.exit(main())
