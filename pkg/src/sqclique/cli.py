"""Command line front-end.

Every command prints one JSON run report on stdout (``--quiet`` prints only
``pass`` or ``fail``) and exits 0 when the report passes, 1 when it does
not, and 2 on usage or input errors. Graphs are written to ``-o`` files.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from fractions import Fraction
from importlib import metadata, resources
from typing import Any, Dict, List, Optional, Sequence

from .analysis import degeneracy, degeneracy_order, mad, square, square_degeneracy_report
from .clique import DEFAULT_BUDGET_S, max_clique
from .constructs import example1, example2, example3, fat_clique, random_k_degenerate
from .extraction import (
    MAD_FOUR,
    TWO_DEGENERATE,
    PreconditionError,
    extract_nice_2deg,
    extract_nice_mad4,
    key_inequality_audit,
    search_order,
    simulate_tokens,
    thm1_check,
    verify_nice,
)
from .graph import GraphError, Multigraph, SimpleGraph, is_clique
from .io import GraphDocument, dump, load

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
SEARCH_SLACK = {"f": 72, "g": 532}


class UsageError(Exception):
    pass


def tool_version() -> str:
    try:
        return metadata.version("artifact")
    except metadata.PackageNotFoundError:
        return "0.0.0"


def report_schema() -> dict:
    text = resources.files("sqclique").joinpath("report_schema.json").read_text(encoding="utf-8")
    return json.loads(text)


def fraction_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _load_graph(path: str) -> GraphDocument:
    try:
        return load(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None


def _simple(doc: GraphDocument, path: str) -> SimpleGraph:
    if isinstance(doc.graph, Multigraph):
        raise UsageError(f"{path}: expected a simple graph, got a multigraph")
    return doc.graph


def _resolve_set(doc: GraphDocument, text: Optional[str]) -> List[int]:
    """``text`` names a set stored in the document or lists vertices, e.g. ``{0,1}`` or ``0,1``."""
    if text is None:
        raise UsageError("this command needs --set")
    if text in doc.sets:
        return sorted(doc.sets[text])
    body = text.strip().strip("{}[]()")
    if not body:
        return []
    parts = [p for p in re.split(r"[,\s]+", body) if p]
    if not all(re.fullmatch(r"\d+", p) for p in parts):
        raise UsageError(f"--set {text!r} is neither a stored set nor a vertex list")
    members = sorted({int(p) for p in parts})
    if members and members[-1] >= doc.graph.n:
        raise UsageError(f"--set {text!r}: vertex {members[-1]} out of range")
    return members


def _need(value: Any, flag: str) -> Any:
    if value is None:
        raise UsageError(f"this command needs {flag}")
    return value


# gen ----------------------------------------------------------------------

def cmd_gen(args: argparse.Namespace) -> Dict[str, Any]:
    kind = args.kind
    params: Dict[str, Any] = {"kind": kind}
    if kind == "fat-clique":
        params.update({"h_order": _need(args.h_order, "--h-order"), "multiplicity": _need(args.multiplicity, "--multiplicity")})
        thin = None
        if args.thin:
            thin = [int(x) for x in args.thin.split(",")]
            params["thinned_cycle"] = thin
        h = fat_clique(args.h_order, args.multiplicity, thin)
        results = {"n": h.n, "edge_count": h.edge_count(), "max_degree": h.max_degree()}
        if args.out:
            dump(args.out, h, extra={"params": params})
        return {"params": params, "results": results, "pass": True}

    if kind == "random":
        params.update({"n": _need(args.n, "--n"), "k": args.k or 2, "D": _need(args.D, "--D"), "seed": args.seed})
        g = random_k_degenerate(args.n, params["k"], args.D, args.seed)
        cert = degeneracy_order(g)
        results = {"n": g.n, "m": g.edge_count(), "max_degree": g.max_degree(), "degeneracy": cert.degeneracy}
        checks = {"degeneracy <= k": cert.degeneracy <= params["k"], "max_degree <= D": g.max_degree() <= args.D}
        results["checks"] = checks
        if args.out:
            dump(args.out, g, extra={"params": params})
        return {"params": params, "results": results, "pass": all(checks.values())}

    if kind == "example1":
        params["D"] = _need(args.D, "--D")
        c = example1(args.D)
    elif kind == "example2":
        params.update({"D": _need(args.D, "--D"), "s": _need(args.s, "--s")})
        c = example2(args.D, args.s)
    else:
        params.update({"k": _need(args.k, "--k"), "D": _need(args.D, "--D")})
        if args.S_size is not None:
            params["S_size"] = args.S_size
        c = example3(args.k, args.D, args.S_size)
    if args.out:
        dump(args.out, c.graph, sets=c.sets, extra={"params": params})
    facts = {k: v for k, v in c.facts.items()}
    return {"params": params, "results": {"facts": facts, "checks": dict(c.checks)}, "pass": c.ok}


# analyze --------------------------------------------------------------------

def cmd_analyze(args: argparse.Namespace) -> Dict[str, Any]:
    doc = _load_graph(args.graph)
    g = _simple(doc, args.graph)
    params: Dict[str, Any] = {"metric": args.metric, "graph": args.graph}
    metric = args.metric
    if metric == "square-clique":
        budget = args.budget_s
        w = max_clique(square(g), budget)
        results: Dict[str, Any] = {"omega": w.size, "exact": w.exact, "clique": list(w.members)}
        if not w.exact:
            results["lower_bound_only"] = True
        ok = w.exact
        if args.set is not None:
            S = _resolve_set(doc, args.set)
            params["set"] = args.set
            is_sq_clique = is_clique(square(g), S)
            results["set_size"] = len(S)
            results["set_is_clique"] = is_sq_clique
            results["set_is_maximum"] = is_sq_clique and w.exact and len(S) == w.size
            ok = ok and results["set_is_maximum"]
        return {"params": params, "results": results, "pass": ok}
    if metric == "mad":
        if g.n == 0:
            raise UsageError("mad of an empty graph is undefined")
        value, members = mad(g)
        return {
            "params": params,
            "results": {"mad": fraction_str(value), "below_four": value < 4, "densest": members},
            "pass": True,
        }
    if metric == "degeneracy":
        cert = degeneracy_order(g)
        return {
            "params": params,
            "results": {"degeneracy": cert.degeneracy, "order": list(cert.order.sequence)},
            "pass": cert.check(g),
        }
    params.update({"D": _need(args.D, "--D"), "k": _need(args.k, "--k")})
    rep = square_degeneracy_report(g, args.D, args.k)
    return {"params": params, "results": rep.as_dict(), "pass": rep.ok}


# verify ---------------------------------------------------------------------

def cmd_verify(args: argparse.Namespace) -> Dict[str, Any]:
    path = _need(args.graph, "--graph")
    doc = _load_graph(path)
    params: Dict[str, Any] = {"check": args.check, "graph": path}
    if args.check == "thm1":
        params["D"] = _need(args.D, "--D")
        h = doc.graph if isinstance(doc.graph, Multigraph) else Multigraph(doc.graph.n, {e: 1 for e in doc.graph.edges()})
        rep = thm1_check(h, args.D)
        return {"params": params, "results": rep.as_dict(), "pass": rep.hypothesis_holds and rep.conclusion_holds}
    g = _simple(doc, path)
    S = _resolve_set(doc, args.set)
    params["set"] = args.set
    if args.check == "nice":
        verdict = verify_nice(g, S)
        results = {"nice": verdict.nice, "failed": verdict.failed, "reason": verdict.reason}
        if verdict.order is not None:
            results["order"] = list(verdict.order.sequence)
        return {"params": params, "results": results, "pass": verdict.nice}
    params.update({"D": _need(args.D, "--D"), "variant": args.variant})
    variant = TWO_DEGENERATE if args.variant == "2deg" else MAD_FOUR
    if doc.order is not None:
        order = doc.order
        params["order"] = "from file"
    else:
        order = search_order(g, S, 2 if variant == TWO_DEGENERATE else max(2, degeneracy(g)))
        params["order"] = "computed"
    try:
        ledger = simulate_tokens(g, S, order, variant)
    except PreconditionError as exc:
        return {"params": params, "results": {"error": str(exc)}, "pass": False}
    audit = key_inequality_audit(g, S, order, ledger, args.D)
    results = {
        "checked": audit.checked,
        "violations": [list(v) for v in audit.violations],
        "min_slack": audit.min_slack,
    }
    return {"params": params, "results": results, "pass": audit.ok}


# extract --------------------------------------------------------------------

def cmd_extract(args: argparse.Namespace) -> Dict[str, Any]:
    doc = _load_graph(args.graph)
    g = _simple(doc, args.graph)
    S = _resolve_set(doc, args.set)
    D = _need(args.D, "--D")
    params = {"variant": args.variant, "graph": args.graph, "set": args.set, "D": D}
    run = extract_nice_2deg if args.variant == "2deg" else extract_nice_mad4
    try:
        result = run(g, S, D)
    except PreconditionError as exc:
        return {"params": params, "results": {"error": f"precondition failed: {exc}"}, "pass": False}
    stats = result.as_stats()
    if args.out:
        dump(args.out, result.graph_prime, sets={"S": result.s_prime}, order=result.order_prime, extra={"stats": stats})
    asserted = all(v is not False for v in result.claims.values())
    ok = asserted and (result.nice or args.variant == "mad4")
    return {"params": params, "results": stats, "pass": ok}


# search ---------------------------------------------------------------------

def _anchor(target: str, D: int) -> Optional[SimpleGraph]:
    """The extremal construction for D (or D-1 when D is odd), if it fits under max degree D."""
    even = D if D % 2 == 0 else D - 1
    if even < 4:
        return None
    c = example1(even)
    return c.graph if c.graph.max_degree() <= D else None


def cmd_search(args: argparse.Namespace) -> Dict[str, Any]:
    D = _need(args.D, "--D")
    if args.samples < 1:
        raise UsageError("--samples must be at least 1")
    lo, hi = args.n_min, args.n_max
    if not 1 <= lo <= hi:
        raise UsageError("need 1 <= --n-min <= --n-max")
    target = args.target
    params = {"target": target, "D": D, "samples": args.samples, "n_min": lo, "n_max": hi, "seed": args.seed}
    k = 2 if target == "f" else 3
    best = -1
    witness: Dict[str, Any] = {}
    exact = True
    rejected = 0
    anchor_used = False
    over_envelope = []
    upper = Fraction(5 * D, 2) + SEARCH_SLACK[target]
    for i in range(args.samples):
        g = _anchor(target, D) if i == 0 else None
        if g is not None:
            anchor_used = True
        else:
            # sample i draws from its own generator, so samples are independent of each other
            sample_seed = args.seed * 1_000_003 + i
            n = lo + sample_seed % (hi - lo + 1)
            g = random_k_degenerate(n, k, D, sample_seed)
            if target == "g" and g.n and mad(g)[0] >= 4:
                rejected += 1
                continue
        w = max_clique(square(g), args.budget_s)
        exact = exact and w.exact
        if w.size > upper:
            over_envelope.append(i)
        if w.size > best:
            best = w.size
            witness = {"sample": i, "n": g.n, "m": g.edge_count(), "clique": list(w.members)}
    results = {
        "best": best,
        "witness": witness,
        "anchor_used": anchor_used,
        "rejected_mad_ge_4": rejected,
        "envelope": [fraction_str(Fraction(5 * D, 2)), fraction_str(upper)],
        "all_exact": exact,
        "above_envelope": over_envelope,
    }
    return {"params": params, "results": results, "pass": exact and not over_envelope}


# parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--out", help="output graph file")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget-s", type=float, default=DEFAULT_BUDGET_S, help="clique search time budget")
    common.add_argument("--quiet", action="store_true", help="print only pass/fail")

    parser = argparse.ArgumentParser(prog="sqclique", description="Cliques in graph squares: constructions, analyses, extraction.")
    parser.add_argument("--json-schema", action="store_true", help="print the run report JSON schema and exit")
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("gen", parents=[common], help="generate a construction")
    p.add_argument("kind", choices=["example1", "example2", "example3", "fat-clique", "random"])
    p.add_argument("--D", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--S-size", dest="S_size", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--h-order", type=int)
    p.add_argument("--multiplicity", type=int)
    p.add_argument("--thin", help="comma-separated cycle whose edges lose two copies")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("analyze", parents=[common], help="measure a graph")
    p.add_argument("metric", choices=["square-clique", "mad", "degeneracy", "square-degeneracy"])
    p.add_argument("graph")
    p.add_argument("--set")
    p.add_argument("--D", type=int)
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", parents=[common], help="check niceness, the multigraph bound or the key inequality")
    p.add_argument("check", choices=["nice", "thm1", "key-inequality"])
    p.add_argument("--graph")
    p.add_argument("--set")
    p.add_argument("--D", type=int)
    p.add_argument("--variant", choices=["2deg", "mad4"], default="2deg")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("extract", parents=[common], help="extract a nice triple")
    p.add_argument("variant", choices=["2deg", "mad4"])
    p.add_argument("graph")
    p.add_argument("--set", required=True)
    p.add_argument("--D", type=int, required=True)
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("search", parents=[common], help="random lower-bound search for f(D) or g(D)")
    p.add_argument("target", choices=["f", "g"])
    p.add_argument("--D", type=int, required=True)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--n-min", type=int, default=10)
    p.add_argument("--n-max", type=int, default=60)
    p.set_defaults(func=cmd_search)
    return parser


def payload(report: Dict[str, Any]) -> str:
    """Report text without the timing field, for determinism comparisons."""
    return json.dumps({k: v for k, v in report.items() if k != "elapsed_ms"}, sort_keys=True)


def run(argv: Optional[Sequence[str]] = None) -> tuple:
    """Execute a command; returns (exit code, report or None)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (EXIT_USAGE if exc.code else EXIT_PASS), None
    if args.json_schema:
        print(json.dumps(report_schema(), indent=2, sort_keys=True))
        return EXIT_PASS, None
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE, None
    start = time.monotonic()
    try:
        body = args.func(args)
    except (UsageError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE, None
    report = {
        "command": args.command,
        "params": body["params"],
        "results": body["results"],
        "pass": bool(body["pass"]),
        "elapsed_ms": int((time.monotonic() - start) * 1000),
        "seed": args.seed,
        "tool_version": tool_version(),
    }
    if args.quiet:
        print("pass" if report["pass"] else "fail")
    else:
        print(json.dumps(report, sort_keys=True))
    return (EXIT_PASS if report["pass"] else EXIT_FAIL), report


def main(argv: Optional[Sequence[str]] = None) -> int:
    code, _ = run(argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
