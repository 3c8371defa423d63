"""Command-line front end.

Graphs are read one per line (graph6, or a whole edge-list/DIMACS text
when the input holds a single graph) from a file argument or stdin, and
all reports go to stdout.  ``--json`` switches every command to
line-delimited JSON records mirroring the human output field-for-field.

Exit codes: 0 success, 1 a VIOLATED verdict or failed audit case was
found, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterator, Sequence

from .catalog import catalog, get
from .cycles import (
    CeilingError,
    circumference,
    every_longest_cycle_satisfies,
    exists_cycle_satisfying,
    hamiltonian,
    longest_path,
)
from .families import FAMILIES, build, list_families
from .formats import FormatError, encode_graph6, parse_any, parse_graph6
from .graph import Graph, GraphError
from .invariants import invariant_report
from .registry import ASSERTABLE_CLASSES, audit_sharpness, check
from .structure import contains_induced, pattern
from .sweep import MODELS, sweep


class UsageError(Exception):
    pass


def _read_graphs(path: str | None) -> Iterator[tuple[str, Graph]]:
    """Yield (label, graph) pairs from a file or stdin.

    Lines are treated as graph6; if the first line starts a DIMACS or
    edge-list document, the whole input is parsed as one graph.
    """
    text = sys.stdin.read() if path in (None, "-") else open(path).read()
    stripped = text.strip()
    if not stripped:
        return
    first = stripped.splitlines()[0].strip()
    if first.startswith(("p ", "c ")) or (
        len(first.split()) == 2 and all(tok.isdigit() for tok in first.split())
    ):
        yield "input", parse_any(text)
        return
    for i, line in enumerate(stripped.splitlines()):
        line = line.strip()
        if not line:
            continue
        yield f"line {i + 1}", parse_graph6(line)


def _emit(args, record: dict, human: str) -> None:
    if args.json:
        print(json.dumps(record))
    else:
        print(human)


# -- subcommands ----------------------------------------------------------


def _cmd_invariants(args) -> int:
    for label, g in _read_graphs(args.graphs):
        rep = invariant_report(g)
        if args.json:
            print(json.dumps({"graph": encode_graph6(g), **rep.to_record()}))
        else:
            print(f"# {label} ({encode_graph6(g)})")
            print("\n".join(rep.to_lines()))
    return 0


def _cmd_solve(args) -> int:
    prob = args.problem
    for label, g in _read_graphs(args.graphs):
        g6 = encode_graph6(g)
        try:
            if prob == "hamilton":
                cert = hamiltonian(g)
                if cert is None:
                    _emit(args, {"graph6": g6, "hamiltonian": False},
                          f"{g6}: non-hamiltonian")
                else:
                    _emit(args, {"graph6": g6, "hamiltonian": True, "cycle": str(cert)},
                          f"{g6}: hamiltonian cycle {cert}")
            elif prob == "circumference":
                c, cert = circumference(g)
                _emit(args, {"graph6": g6, "circumference": c, "cycle": str(cert)},
                      f"{g6}: c = {c}, cycle {cert}")
            elif prob == "longest-path":
                length, cert = longest_path(g)
                _emit(args, {"graph6": g6, "longestPath": length, "path": str(cert)},
                      f"{g6}: longest path has {length} edges: {cert}")
            elif prob == "every-longest":
                ok, counter = every_longest_cycle_satisfies(g, args.prop, args.lam)
                rec = {"graph6": g6, "property": args.prop, "everyLongest": ok}
                msg = f"{g6}: every longest cycle is {args.prop}"
                if not ok:
                    rec["counterexample"] = str(counter)
                    msg = f"{g6}: longest cycle {counter} is not {args.prop}"
                if args.lam is not None:
                    rec["lambda"] = args.lam
                _emit(args, rec, msg)
            else:  # exists
                cert = exists_cycle_satisfying(g, args.prop, args.lam)
                rec = {"graph6": g6, "property": args.prop, "exists": cert is not None}
                if cert is not None:
                    rec["cycle"] = str(cert)
                    msg = f"{g6}: {args.prop} cycle of length {cert.length}: {cert}"
                else:
                    msg = f"{g6}: no {args.prop} cycle"
                if args.lam is not None:
                    rec["lambda"] = args.lam
                _emit(args, rec, msg)
        except CeilingError as exc:
            _emit(args, {"graph6": g6, "ceiling": str(exc)}, f"{g6}: ceiling: {exc}")
    return 0


def _cmd_free(args) -> int:
    pats = [(tok, pattern(tok)) for tok in args.patterns.split(",")]
    for label, g in _read_graphs(args.graphs):
        g6 = encode_graph6(g)
        hits = {}
        for tok, h in pats:
            emb = contains_induced(g, h)
            if emb is not None:
                hits[tok] = [emb[i] for i in range(h.n)]
        if args.json:
            print(json.dumps({"graph6": g6, "free": not hits, "embeddings": hits}))
        elif not hits:
            print(f"{g6}: {{{args.patterns}}}-free")
        else:
            found = "; ".join(f"{tok} at {vs}" for tok, vs in hits.items())
            print(f"{g6}: contains {found}")
    return 0


def _cmd_construct(args) -> int:
    if args.family == "list":
        for fam in list_families():
            params = ", ".join(fam.params) if fam.params else "none"
            print(f"{fam.name}: params {params} -- {fam.description}")
        return 0
    if args.family not in FAMILIES:
        raise UsageError(
            f"unknown family {args.family!r}; run `cyclekit construct list`"
        )
    params: dict[str, int] = {}
    edges_out = args.edges
    rest = list(args.params)
    while rest:
        key = rest.pop(0)
        if key == "--edges":
            edges_out = True
            continue
        if key == "--graph6":
            edges_out = False
            continue
        if not key.startswith("--") or not rest:
            raise UsageError(f"family parameters look like --name value (got {key!r})")
        try:
            params[key[2:]] = int(rest.pop(0))
        except ValueError as exc:
            raise UsageError(f"parameter {key} needs an integer value") from exc
    g = build(args.family, **params)
    if edges_out:
        print(g.n, g.q)
        for u, v in g.edges():
            print(u, v)
    else:
        print(encode_graph6(g))
    return 0


def _cmd_check(args) -> int:
    specs = [get(args.theorem)] if args.theorem else catalog()
    assume = args.assume or []
    for cls in assume:
        if cls not in ASSERTABLE_CLASSES:
            raise UsageError(
                f"--assume takes one of: {', '.join(sorted(ASSERTABLE_CLASSES))}"
            )
    bad = 0
    for label, g in _read_graphs(args.graphs):
        g6 = encode_graph6(g)
        for spec in specs:
            v = check(g, spec, assume, lam=args.lam)
            rec = {"graph6": g6, **v.to_record()}
            if assume:
                rec["assumed"] = assume
            suffix = f" [assumed: {', '.join(assume)}]" if assume else ""
            _emit(args, rec, f"{g6} {spec.id}: {v.kind} ({v.detail}){suffix}")
            bad += v.kind == "VIOLATED"
    return 1 if bad else 0


def _cmd_audit(args) -> int:
    spec = get(args.theorem)
    results = audit_sharpness(spec, args.range)
    failed = 0
    for r in results:
        failed += not r.passed
        rec = {
            "theorem": spec.id,
            "case": r.case,
            "graph": r.graph_label,
            "passed": r.passed,
            "detail": r.detail,
            "warnings": r.warnings,
        }
        status = "PASS" if r.passed else "FAIL"
        warn = f" (warnings: {'; '.join(r.warnings)})" if r.warnings else ""
        _emit(args, rec, f"{spec.id} [{r.case}] {r.graph_label}: {status}{warn}")
        if not r.passed and not args.json:
            print(f"  {r.detail}")
    if not results:
        _emit(args, {"theorem": spec.id, "cases": 0},
              f"{spec.id}: no sharpness cases declared")
    return 1 if failed else 0


def _cmd_sweep(args) -> int:
    if args.model == "gnp":
        gen = MODELS["gnp"](args.n, args.p, args.count, args.seed)
    elif args.model == "regular":
        if args.d is None:
            raise UsageError("--model regular needs --d")
        gen = MODELS["regular"](args.n, args.d, args.count, args.seed)
    else:
        if args.a is None or args.b is None:
            raise UsageError("--model bipartite needs --a and --b")
        gen = MODELS["bipartite"](args.a, args.b, args.p, args.count, args.seed)
    rep = sweep(gen, keep_records=args.json,
                include_quarantined=args.include_quarantined)
    if args.json:
        for r in rep.records:
            print(json.dumps(r.to_record()))
    else:
        print(rep.table())
    for g6, v in rep.violated:
        line = {"graph6": g6, **v.to_record()}
        print(json.dumps(line) if args.json else f"VIOLATED on {g6}: {line}",
              file=sys.stderr)
    return 1 if rep.violated else 0


def _cmd_catalog(args) -> int:
    for spec in catalog():
        rec = {
            "id": spec.id,
            "title": spec.title,
            "statement": spec.statement,
            "nFloor": spec.n_floor,
            "parameterized": spec.lambdas is not None,
            "sharpnessCases": len(spec.sharpness),
            "quarantined": spec.quarantined,
        }
        if spec.notes:
            rec["notes"] = spec.notes
        quar = " [quarantined]" if spec.quarantined else ""
        _emit(args, rec, f"{spec.id:6s} {spec.title}: {spec.statement}{quar}")
    return 0


# -- argument parsing ------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="cyclekit",
        description="Exact invariants, cycle solvers and theorem checking for large-cycle graph theory.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, graphs=True):
        p.add_argument("--json", action="store_true",
                       help="line-delimited JSON records instead of human output")
        if graphs:
            p.add_argument("graphs", nargs="?", default=None,
                           help="input file (graph6 lines, edge list or DIMACS); default stdin")

    p = sub.add_parser("invariants", help="exact invariant report per graph")
    common(p)
    p.set_defaults(fn=_cmd_invariants)

    p = sub.add_parser("solve", help="cycle and path solvers with certificates")
    p.add_argument("problem", choices=[
        "hamilton", "circumference", "longest-path", "every-longest", "exists"])
    p.add_argument("prop", nargs="?", choices=["dominating", "PD", "CD"],
                   help="property for every-longest / exists")
    p.add_argument("--lambda", dest="lam", type=int, default=None,
                   help="parameter for PD/CD properties")
    common(p)
    p.set_defaults(fn=_cmd_solve)

    p = sub.add_parser("free", help="forbidden induced subgraph test")
    p.add_argument("--patterns", required=True,
                   help="comma-separated tokens, e.g. claw,P6,N_1_1_1,K33")
    common(p)
    p.set_defaults(fn=_cmd_free)

    p = sub.add_parser("construct", help="build a named extremal family member")
    p.add_argument("--edges", action="store_true",
                   help="emit edge-list text instead of graph6")
    p.add_argument("--json", action="store_true", help=argparse.SUPPRESS)
    p.add_argument("family", help="family name, or 'list' to enumerate")
    p.add_argument("params", nargs=argparse.REMAINDER,
                   help="family parameters as --name value pairs")
    p.set_defaults(fn=_cmd_construct)

    p = sub.add_parser("check", help="check catalog theorems against graphs")
    p.add_argument("--theorem", default=None, help="single theorem id (default: all)")
    p.add_argument("--assume", action="append", default=None,
                   help="assert an assertable-only class premise (repeatable)")
    p.add_argument("--lambda", dest="lam", type=int, default=None,
                   help="fix the parameter of a parameterized theorem")
    common(p)
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("audit", help="run a theorem's declared sharpness cases")
    p.add_argument("--theorem", required=True)
    p.add_argument("--range", default=None, help="family parameter range, e.g. 3..6")
    common(p, graphs=False)
    p.set_defaults(fn=_cmd_audit)

    p = sub.add_parser("sweep", help="seeded random-ensemble soundness sweep")
    p.add_argument("--model", choices=sorted(MODELS), default="gnp")
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--d", type=int, default=None, help="degree for --model regular")
    p.add_argument("--a", type=int, default=None, help="left side for --model bipartite")
    p.add_argument("--b", type=int, default=None, help="right side for --model bipartite")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--include-quarantined", action="store_true")
    common(p, graphs=False)
    p.set_defaults(fn=_cmd_sweep)

    p = sub.add_parser("catalog", help="list all theorem entries")
    common(p, graphs=False)
    p.set_defaults(fn=_cmd_catalog)

    return top


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "solve" and args.problem in ("every-longest", "exists"):
        if args.prop is None:
            parser.error(f"solve {args.problem} needs a property argument")
        if args.prop in ("PD", "CD") and args.lam is None:
            parser.error(f"solve {args.problem} {args.prop} needs --lambda")
    try:
        return args.fn(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (GraphError, FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
