"""Command-line front end.

Every subcommand prints one JSON document on standard output.  Exit codes:
0 on success, 1 on a domain failure (invalid colouring, not equivalent,
failed plan check, budget exhausted), 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .enumerator import (
    DEFAULT_MAX_FORMS, SearchBudgetExceeded, SizeGuardExceeded, is_rigid, kempe_classes,
)
from .generators import (
    complete_bipartite, complete_graph, perfect_one_factorization, random_bounded_degree,
    rigid_colouring,
)
from .graph import ColouringError, GraphError, validate_colouring
from .io import (
    colouring_from_json, colouring_to_json, dump_json, graph_from_json, graph_to_json, load_json,
)
from .planner import KempePlan, NotEquivalentError, PreconditionError, plan_kempe, verify_plan


class UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kempe", description="Kempe equivalence of edge-colourings")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="validate a colouring")
    v.add_argument("--graph", required=True)
    v.add_argument("--phi", required=True)
    v.add_argument("--k", type=int)

    pl = sub.add_parser("plan", help="plan Kempe changes from phi to psi")
    pl.add_argument("--graph", required=True)
    pl.add_argument("--phi", required=True)
    pl.add_argument("--psi", required=True)
    pl.add_argument("--k", type=int)
    pl.add_argument("--method", choices=["constructive", "search"], default="constructive")
    pl.add_argument("--budget", type=int, default=10**6)

    c = sub.add_parser("classes", help="count Kempe classes")
    c.add_argument("--graph", required=True)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--workers", type=int, default=1)
    c.add_argument("--budget", type=int, default=DEFAULT_MAX_FORMS)

    cp = sub.add_parser("check-plan", help="replay a plan")
    cp.add_argument("--graph", required=True)
    cp.add_argument("--phi", required=True)
    cp.add_argument("--psi", required=True)
    cp.add_argument("--plan", required=True)

    g = sub.add_parser("generate", help="write instance files")
    gsub = g.add_subparsers(dest="kind", required=True)
    gc = gsub.add_parser("complete")
    gc.add_argument("--n", type=int, required=True)
    gb = gsub.add_parser("bipartite")
    gb.add_argument("--p", type=int, required=True)
    gb.add_argument("--q", type=int, required=True)
    gp = gsub.add_parser("p1f")
    gp.add_argument("--order", type=int, required=True)
    gr = gsub.add_parser("rigid")
    gr.add_argument("--order", type=int, required=True)
    gn = gsub.add_parser("random")
    gn.add_argument("--n", type=int, required=True)
    gn.add_argument("--max-degree", type=int, required=True)
    gn.add_argument("--multigraph", action="store_true")
    gn.add_argument("--seed", type=int, required=True)
    for sp in (gc, gb, gp, gr, gn):
        sp.add_argument("--out", help="graph file to write (stdout when omitted)")
        sp.add_argument("--colouring-out", help="colouring file to write (p1f, rigid)")

    r = sub.add_parser("rigid-test", help="check whether a colouring is rigid")
    r.add_argument("--graph", required=True)
    r.add_argument("--phi", required=True)
    r.add_argument("--k", type=int)
    return p


def _load(args):
    try:
        G = graph_from_json(load_json(args.graph))
        phi = colouring_from_json(load_json(args.phi)) if getattr(args, "phi", None) else None
        psi = colouring_from_json(load_json(args.psi)) if getattr(args, "psi", None) else None
    except (OSError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    k = getattr(args, "k", None)
    if k is not None:
        if k < 1:
            raise UsageError("--k must be positive")
        for c in (phi, psi):
            if c is not None and c.k != k:
                raise UsageError(f"colouring palette {c.k} does not match --k {k}")
    for c in (phi, psi):
        if c is not None and len(c) != G.m:
            raise UsageError(f"colouring has {len(c)} entries for {G.m} edges")
    return G, phi, psi


def _cmd_verify(args) -> tuple[int, dict]:
    G, phi, _ = _load(args)
    report = validate_colouring(G, phi)
    return (0 if report.valid else 1), report.to_json()


def _cmd_plan(args) -> tuple[int, dict]:
    if args.budget < 1:
        raise UsageError("--budget must be positive")
    G, phi, psi = _load(args)
    for c in (phi, psi):
        report = validate_colouring(G, c)
        if not report.valid:
            raise UsageError(f"invalid colouring: {report.to_json()}")
    try:
        plan = plan_kempe(G, phi, psi, method=args.method, budget=args.budget)
    except PreconditionError as exc:
        raise UsageError(str(exc)) from exc
    except NotEquivalentError as exc:
        return 1, {"error": "not equivalent", "detail": str(exc)}
    except SearchBudgetExceeded as exc:
        return 1, {"error": "budget exhausted", "detail": str(exc)}
    return 0, plan.to_json()


def _cmd_classes(args) -> tuple[int, dict]:
    if args.workers < 1 or args.budget < 1:
        raise UsageError("--workers and --budget must be positive")
    G, _, _ = _load(args)
    try:
        report = kempe_classes(G, args.k, workers=args.workers, max_forms=args.budget)
    except SizeGuardExceeded as exc:
        return 1, {"error": "budget exhausted", "detail": str(exc)}
    return 0, report.to_json()


def _cmd_check_plan(args) -> tuple[int, dict]:
    G, phi, psi = _load(args)
    try:
        plan = KempePlan.from_json(load_json(args.plan))
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"malformed plan: {exc}") from exc
    check = verify_plan(G, phi, plan, psi)
    return (0 if check.ok else 1), check.to_json()


def _cmd_generate(args) -> tuple[int, dict]:
    colouring = None
    try:
        if args.kind == "complete":
            G = complete_graph(args.n)
        elif args.kind == "bipartite":
            G = complete_bipartite(args.p, args.q)
        elif args.kind == "p1f":
            G, colouring = perfect_one_factorization(args.order).colouring()
        elif args.kind == "rigid":
            G, colouring = rigid_colouring(args.order)
        else:
            G = random_bounded_degree(args.n, args.max_degree, args.multigraph, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    except RuntimeError as exc:
        return 1, {"error": str(exc)}
    out = {"graph": graph_to_json(G)}
    if colouring is not None:
        out["colouring"] = colouring_to_json(colouring)
    if args.out:
        dump_json(out["graph"], args.out)
    if colouring is not None and args.colouring_out:
        dump_json(out["colouring"], args.colouring_out)
    return 0, out


def _cmd_rigid(args) -> tuple[int, dict]:
    G, phi, _ = _load(args)
    if not validate_colouring(G, phi).valid:
        return 1, {"error": "invalid colouring"}
    return 0, {"rigid": is_rigid(G, phi)}


COMMANDS = {
    "verify": _cmd_verify,
    "plan": _cmd_plan,
    "classes": _cmd_classes,
    "check-plan": _cmd_check_plan,
    "generate": _cmd_generate,
    "rigid-test": _cmd_rigid,
}


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    """Run one subcommand and return its exit code."""
    out = sys.stdout if out is None else out
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        code, payload = COMMANDS[args.command](args)
    except (UsageError, GraphError, ColouringError) as exc:
        print(dump_json({"error": str(exc)}), file=out)
        return 2
    print(dump_json(payload), file=out)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
