"""Command-line front end.

Subcommands wire the library into reproducible runs:

  gen        emit a generated graph (graph6, dot, edges, json, table)
  invariant  compute a certificate for a parsed input graph
  verify     run the claim ledger over a parameter range
  census     filter regular graphs through a predicate pipeline
  corpus     emit seeded random connected graphs for oracle testing

Exit codes: 0 success, 2 usage error, 3 input parse error, 4 solver
envelope exceeded, 5 verification failure (a FAIL row in the ledger).
JSON output has sorted keys and is byte-identical across worker counts.
Table output colors verdicts only on a tty and never when NO_COLOR is set.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from .formats import ParseError, parse_edge_list, parse_graph6, serialize_edge_list, serialize_graph6, to_dot
from .generators import FIXTURE_BUILDERS, build_jm, cycle_power, random_connected_graph
from .graphs import EnvelopeError, Graph, bits
from .invariants import (
    connectivity,
    connectivity_json,
    independence_json,
    independence_number,
    induced_stars,
    stars_json,
    toughness,
    toughness_json,
)
from .search import PREDICATES, SearchSpec, run_census
from .verify import CLAIM_IDS, M_CLAIMS, applicable, ledger_json, run_ledger

OK = 0
USAGE = 2
PARSE = 3
ENVELOPE = 4
VERIFY_FAIL = 5


class UsageError(Exception):
    pass


def _err(msg: str) -> None:
    print(f"error: {msg}", file=sys.stderr)


def _use_color(stream) -> bool:
    return stream.isatty() and not os.environ.get("NO_COLOR")


def _verdict_text(verdict: str, stream) -> str:
    if not _use_color(stream):
        return verdict
    code = "32" if verdict == "PASS" else "31"
    return f"\x1b[{code}m{verdict}\x1b[0m"


def _dump_json(payload) -> None:
    sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")


def _parse_m_range(text: str):
    """'3..7' -> range(3, 8); '5' -> range(5, 6)."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}")
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _read_text(args) -> str:
    if getattr(args, "stdin", False):
        return sys.stdin.read()
    path = getattr(args, "input", None)
    if path is None:
        raise UsageError("need --input PATH or --stdin")
    if not os.path.isfile(path):
        raise UsageError(f"no such file: {path}")
    with open(path, encoding="ascii") as fh:
        return fh.read()


def _load_graph(args) -> Graph:
    text = _read_text(args)
    if args.input_format == "edges":
        return parse_edge_list(text)
    return parse_graph6(text.strip())


# ---------------------------------------------------------------------------
# gen

def _graph_table(g: Graph, names: list[str] | None) -> str:
    if names is None:
        names = [str(v) for v in range(g.n)]
    width = max(len(s) for s in names)
    lines = [f"{g.n} vertices, {g.edge_count()} edges"]
    for v in range(g.n):
        nbrs = " ".join(names[u] for u in bits(g.adj[v]))
        lines.append(f"{names[v]:>{width}} : {nbrs}")
    return "\n".join(lines) + "\n"


def _emit_graph(g: Graph, fmt: str, names: list[str] | None) -> None:
    if fmt == "graph6":
        sys.stdout.write(serialize_graph6(g) + "\n")
    elif fmt == "edges":
        sys.stdout.write(serialize_edge_list(g))
    elif fmt == "dot":
        sys.stdout.write(to_dot(g, names))
    elif fmt == "table":
        sys.stdout.write(_graph_table(g, names))
    else:
        payload = {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}
        if names is not None:
            payload["names"] = names
        _dump_json(payload)


def cmd_gen(args) -> int:
    names = None
    if args.family == "jm":
        if args.m is None:
            raise UsageError("gen jm needs --m")
        lg = build_jm(args.m)
        g = lg.graph
        if args.labels:
            names = lg.labeling.names()
    elif args.family == "cycle_power":
        if args.n is None or args.k is None:
            raise UsageError("gen cycle_power needs --n and --k")
        g = cycle_power(args.n, args.k)
    elif args.family == "star":
        if args.k is None:
            raise UsageError("gen star needs --k (leaf count)")
        g = FIXTURE_BUILDERS["star"](args.k)
    elif args.family == "petersen":
        g = FIXTURE_BUILDERS["petersen"]()
    else:
        if args.n is None:
            raise UsageError(f"gen {args.family} needs --n")
        g = FIXTURE_BUILDERS[args.family](args.n)
    if args.labels and args.family != "jm":
        raise UsageError("--labels only applies to the jm family")
    _emit_graph(g, args.format, names)
    return OK


# ---------------------------------------------------------------------------
# invariant

def _invariant_payload(which: str, g: Graph, workers: int) -> dict:
    if which == "toughness":
        return toughness_json(toughness(g, workers=workers))
    if which == "connectivity":
        return connectivity_json(connectivity(g))
    if which == "independence":
        return independence_json(*independence_number(g))
    return stars_json(induced_stars(g, 3))


def _invariant_table(payload: dict) -> str:
    if payload.get("invariant") == "claws":
        lines = [f"claws: {payload['count']}"]
        for s in payload["stars"]:
            leaves = " ".join(str(x) for x in s["leaves"])
            lines.append(f"  center {s['center']} leaves {leaves}")
        return "\n".join(lines) + "\n"
    name = payload["invariant"]
    val = payload["value"]
    if val == "infinite":
        return f"{name}: infinite (complete graph)\n"
    shown = f"{val['num']}" if val["den"] == 1 else f"{val['num']}/{val['den']}"
    lines = [f"{name}: {shown}"]
    if payload["witness"] is not None:
        lines.append("witness: " + " ".join(str(v) for v in payload["witness"]))
    if payload.get("components") is not None:
        lines.append(f"components after removal: {payload['components']}")
    return "\n".join(lines) + "\n"


def cmd_invariant(args) -> int:
    g = _load_graph(args)
    payload = _invariant_payload(args.which, g, args.workers)
    if args.format == "table":
        sys.stdout.write(_invariant_table(payload))
    else:
        _dump_json(payload)
    return OK


# ---------------------------------------------------------------------------
# verify

def cmd_verify(args) -> int:
    claims = tuple(args.claim) if args.claim else None
    ms = args.m
    if claims is not None and ms is not None:
        # an explicitly requested claim must apply at every requested m;
        # without an explicit claim list inapplicable combos are just skipped
        for claim in claims:
            if claim not in M_CLAIMS:
                continue
            for m in ms:
                if args.odd_only and m % 2 == 0:
                    continue
                if not applicable(claim, m):
                    raise UsageError(
                        f"claim {claim} does not apply at m={m} "
                        "(check the hypothesis; --odd-only skips even m)")
    reports = run_ledger(ms, claims, odd_only=args.odd_only, workers=args.workers)
    if not reports:
        raise UsageError("selection matches no checks")
    if args.format == "table":
        width = max(len(r.claim) for r in reports)
        for r in reports:
            verdict = _verdict_text(r.verdict, sys.stdout)
            print(f"{verdict:4} {r.claim:<{width}} parameter={r.parameter}")
        failed = sum(not r.passed for r in reports)
        print(f"{len(reports) - failed} passed, {failed} failed")
    else:
        sys.stdout.write(ledger_json(reports))
    return OK if all(r.passed for r in reports) else VERIFY_FAIL


# ---------------------------------------------------------------------------
# census

def _census_table(payload: dict) -> str:
    spec = payload["spec"]
    lines = [
        f"census: n={spec['n']} r={spec['r']} source={spec['source']} "
        f"predicates={','.join(spec['predicates']) or '-'}",
        f"examined: {payload['examined']}",
        f"complete graphs: {payload['complete_graphs']}",
    ]
    for k in sorted(payload["counts"]):
        lines.append(f"count[{k}]: {payload['counts'][k]}")
    lines.append(f"survivors: {len(payload['survivors'])}")
    for rec in payload["survivors"]:
        t = rec["toughness"]["value"]
        shown = "infinite" if t == "infinite" else f"{t['num']}/{t['den']}"
        lines.append(f"  {rec['graph6']} toughness={shown} "
                     f"kappa={rec['connectivity']['value']['num']} "
                     f"has_claw={rec['has_claw']}")
    for err in payload["errors"]:
        lines.append(f"line {err['line']}: {err['message']}")
    return "\n".join(lines) + "\n"


def cmd_census(args) -> int:
    preds = [p for p in PREDICATES if getattr(args, p)]
    source = "stream" if (args.stdin or args.input) else "builtin"
    spec = SearchSpec(n=args.n, r=args.r, source=source, predicates=tuple(preds))
    stream = _read_text(args).splitlines() if source == "stream" else None
    result = run_census(spec, stream=stream, workers=args.workers)
    payload = result.to_json_dict()
    if args.survivors_out:
        with open(args.survivors_out, "w", encoding="ascii") as fh:
            for rec in payload["survivors"]:
                fh.write(rec["graph6"] + "\n")
    if args.emit_dot:
        os.makedirs(args.emit_dot, exist_ok=True)
        for idx, rec in enumerate(payload["survivors"], start=1):
            path = os.path.join(args.emit_dot, f"survivor-{idx:03d}.dot")
            with open(path, "w", encoding="ascii") as fh:
                fh.write(to_dot(parse_graph6(rec["graph6"])))
    if args.format == "table":
        sys.stdout.write(_census_table(payload))
    else:
        _dump_json(payload)
    if args.strict and payload["errors"]:
        _err(f"{len(payload['errors'])} input line(s) rejected")
        return PARSE
    return OK


# ---------------------------------------------------------------------------
# corpus

def cmd_corpus(args) -> int:
    if args.min_n < 2 or args.max_n < args.min_n:
        raise UsageError("need 2 <= min-n <= max-n")
    rng = random.Random(args.seed)
    out = []
    for _ in range(args.count):
        n = rng.randrange(args.min_n, args.max_n + 1)
        out.append(serialize_graph6(random_connected_graph(n, rng, args.p)))
    if args.format == "json":
        _dump_json({"count": len(out), "graphs": out, "seed": args.seed})
    else:
        sys.stdout.write("".join(line + "\n" for line in out))
    return OK


# ---------------------------------------------------------------------------
# parser assembly

def _add_workers(sub) -> None:
    sub.add_argument("--workers", type=int, default=os.cpu_count() or 1,
                     help="worker processes (default: machine parallelism)")


def _add_input(sub) -> None:
    sub.add_argument("--input", metavar="PATH", help="read the graph from a file")
    sub.add_argument("--stdin", action="store_true", help="read the graph from stdin")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toughkit",
        description="exact toughness, connectivity, independence and claw "
                    "certificates for small graphs")
    subs = parser.add_subparsers(dest="cmd", required=True)

    gen = subs.add_parser("gen", help="emit a generated graph")
    gen.add_argument("family", choices=("jm", "cycle_power", "cycle", "path",
                                        "complete", "star", "petersen"))
    gen.add_argument("--m", type=int, help="jm family parameter (m >= 3)")
    gen.add_argument("--n", type=int, help="vertex count")
    gen.add_argument("--k", type=int, help="cycle power distance / star leaves")
    gen.add_argument("--labels", action="store_true",
                     help="use role names (a1 ... c_i) in dot/json/table output")
    gen.add_argument("--format", choices=("graph6", "dot", "edges", "json", "table"),
                     default="graph6")
    gen.set_defaults(handler=cmd_gen)

    inv = subs.add_parser("invariant", help="compute a certificate for one graph")
    inv.add_argument("which", choices=("toughness", "connectivity",
                                       "independence", "claws"))
    _add_input(inv)
    inv.add_argument("--input-format", choices=("graph6", "edges"), default="graph6")
    inv.add_argument("--format", choices=("json", "table"), default="json")
    _add_workers(inv)
    inv.set_defaults(handler=cmd_invariant)

    ver = subs.add_parser("verify", help="run the claim ledger")
    ver.add_argument("--m", type=_parse_m_range, metavar="A..B",
                     help="parameter range (default: per-claim ranges)")
    ver.add_argument("--claim", action="append", choices=CLAIM_IDS,
                     help="restrict to a claim (repeatable)")
    ver.add_argument("--odd-only", action="store_true",
                     help="skip even m in the requested range")
    ver.add_argument("--format", choices=("json", "table"), default="json")
    _add_workers(ver)
    ver.set_defaults(handler=cmd_verify)

    cen = subs.add_parser("census", help="filter regular graphs by predicates")
    cen.add_argument("--n", type=int, required=True)
    cen.add_argument("--r", type=int, required=True)
    cen.add_argument("--connected", action="store_true")
    cen.add_argument("--claw-free", dest="claw_free", action="store_true")
    cen.add_argument("--has-claw", dest="has_claw", action="store_true")
    cen.add_argument("--supertough", action="store_true")
    _add_input(cen)
    cen.add_argument("--strict", action="store_true",
                     help="exit 3 if any stream line is rejected")
    cen.add_argument("--survivors-out", metavar="PATH",
                     help="also write survivor graph6 lines to a file")
    cen.add_argument("--emit-dot", metavar="DIR",
                     help="write one DOT file per survivor into a directory")
    cen.add_argument("--format", choices=("json", "table"), default="json")
    _add_workers(cen)
    cen.set_defaults(handler=cmd_census)

    cor = subs.add_parser("corpus", help="emit seeded random connected graphs")
    cor.add_argument("--seed", type=int, required=True)
    cor.add_argument("--count", type=int, default=20)
    cor.add_argument("--min-n", dest="min_n", type=int, default=4)
    cor.add_argument("--max-n", dest="max_n", type=int, default=9)
    cor.add_argument("--p", type=float, default=0.5, help="edge probability")
    cor.add_argument("--format", choices=("graph6", "json"), default="graph6")
    cor.set_defaults(handler=cmd_corpus)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.handler(args)
    except BrokenPipeError:
        return OK
    except ParseError as exc:
        _err(f"parse: {exc}")
        return PARSE
    except EnvelopeError as exc:
        _err(f"envelope: {exc}")
        return ENVELOPE
    except UsageError as exc:
        _err(str(exc))
        return USAGE
    except ValueError as exc:
        _err(str(exc))
        return USAGE
    except OSError as exc:
        _err(str(exc))
        return USAGE


def run() -> None:
    sys.exit(main())
